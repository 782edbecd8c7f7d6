"""Physical constants, SI units throughout the package."""

HBAR = 1.054571817e-34      # J s
EPS0 = 8.8541878128e-12     # F/m
MU0 = 1.25663706212e-6      # H/m
C_LIGHT = 299792458.0       # m/s
