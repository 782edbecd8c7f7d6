"""Run configuration: one INI-style file describing a two-sphere system.

Sections: [medium], [sphere1], [sphere2], optional [system],
[species1], [species2], [species_medium], [quadrature], [mc].  All
numbers are plain SI values (scientific notation accepted); units are
fixed by the file format and never parsed.

Response-function grammar for the ``eps`` and ``mu`` keys:

    constant 1.0
    oscillator <wp> <w0> <gamma> [<wp> <w0> <gamma> ...]    (rad/s)
    table <xi>:<value> <xi>:<value> ...                     (rad/s)
"""

import configparser

from .errors import ConfigError
from .materials import (ConstantResponse, LorentzPolarisability,
                        MolecularSpecies, Oscillator, OscillatorResponse,
                        TabulatedResponse)
from .oracles import MonteCarloSpec
from .polarisability import MediumSpec, SphereSpec
from .quadrature import QuadratureSpec, suggest_scale

__all__ = ["SystemConfig", "parse_config", "parse_response"]

_SPECIES_SECTIONS = ("species1", "species2", "species_medium")


class SystemConfig:
    """Everything a command needs to run: materials, geometry, numerics."""

    __slots__ = ("medium", "sphere1", "sphere2", "separation", "species",
                 "quadrature", "mc")

    def __init__(self, medium, sphere1, sphere2, separation, species,
                 quadrature, mc):
        self.medium = medium
        self.sphere1 = sphere1
        self.sphere2 = sphere2
        self.separation = separation
        self.species = species
        self.quadrature = quadrature
        self.mc = mc

    def system(self, separation=None):
        """TwoSphereSystem at the given (or configured) separation."""
        from .dispersion import TwoSphereSystem

        r12 = separation if separation is not None else self.separation
        if r12 is None:
            raise ConfigError("no separation configured; set [system] separation "
                              "or pass --r12")
        try:
            return TwoSphereSystem(self.sphere1, self.sphere2, self.medium, r12)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


def _floats(tokens, n_expected, context):
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise ConfigError(f"{context}: bad number in {tokens!r}") from exc
    if n_expected is not None and len(values) != n_expected:
        raise ConfigError(f"{context}: expected {n_expected} numbers, got {len(values)}")
    return values


def parse_response(text, context="response"):
    """Response function from one configuration value."""
    tokens = text.split()
    if not tokens:
        raise ConfigError(f"{context}: empty response definition")
    kind, args = tokens[0].lower(), tokens[1:]
    try:
        if kind == "constant":
            (value,) = _floats(args, 1, context)
            return ConstantResponse(value)
        if kind == "oscillator":
            if not args or len(args) % 3 != 0:
                raise ConfigError(f"{context}: oscillator needs triples wp w0 gamma")
            values = _floats(args, None, context)
            oscillators = [Oscillator(*values[i:i + 3]) for i in range(0, len(values), 3)]
            return OscillatorResponse(oscillators)
        if kind == "table":
            pairs = []
            for token in args:
                left, _, right = token.partition(":")
                if not right:
                    raise ConfigError(f"{context}: table entries look like xi:value")
                pairs.append((float(left), float(right)))
            if not pairs:
                raise ConfigError(f"{context}: empty table")
            return TabulatedResponse([p[0] for p in pairs], [p[1] for p in pairs])
    except (ValueError, ConfigError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"{context}: {exc}") from exc
    raise ConfigError(f"{context}: unknown response kind {kind!r}")


def _get(parser, section, key, fallback=None):
    if parser.has_option(section, key):
        return parser.get(section, key)
    return fallback


def _getfloat(parser, section, key, fallback=None, context=None):
    raw = _get(parser, section, key)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key}: not a number: {raw!r}") from exc


def _parse_medium(parser):
    if not parser.has_section("medium"):
        raise ConfigError("missing [medium] section")
    eps = parse_response(_get(parser, "medium", "eps", "constant 1.0"), "[medium] eps")
    mu = parse_response(_get(parser, "medium", "mu", "constant 1.0"), "[medium] mu")
    return MediumSpec(eps, mu)


def _parse_sphere(parser, section):
    if not parser.has_section(section):
        raise ConfigError(f"missing [{section}] section")
    radius = _getfloat(parser, section, "radius")
    if radius is None:
        raise ConfigError(f"[{section}] radius is required")
    eps = parse_response(_get(parser, section, "eps", "constant 1.0"), f"[{section}] eps")
    mu = parse_response(_get(parser, section, "mu", "constant 1.0"), f"[{section}] mu")
    try:
        return SphereSpec(radius, eps, mu)
    except ValueError as exc:
        raise ConfigError(f"[{section}]: {exc}") from exc


def _parse_species(parser, section):
    density = _getfloat(parser, section, "density")
    alpha_static = _getfloat(parser, section, "alpha_static")
    resonance = _getfloat(parser, section, "resonance")
    if density is None or alpha_static is None or resonance is None:
        raise ConfigError(f"[{section}] needs density, alpha_static and resonance")
    try:
        return MolecularSpecies(density, LorentzPolarisability(alpha_static, resonance))
    except ValueError as exc:
        raise ConfigError(f"[{section}]: {exc}") from exc


def parse_config(path):
    """Parse a configuration file into a SystemConfig.

    Raises ConfigError on anything that does not resolve: missing
    sections, malformed numbers, invariant violations.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path) as handle:
            parser.read_file(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc

    medium = _parse_medium(parser)
    sphere1 = _parse_sphere(parser, "sphere1")
    sphere2 = _parse_sphere(parser, "sphere2")
    separation = _getfloat(parser, "system", "separation") \
        if parser.has_section("system") else None
    if separation is not None and not separation > 0.0:
        raise ConfigError("[system] separation must be > 0")

    species = {}
    for section in _SPECIES_SECTIONS:
        if parser.has_section(section):
            species[section] = _parse_species(parser, section)

    scale = _getfloat(parser, "quadrature", "scale") \
        if parser.has_section("quadrature") else None
    if scale is None:
        scale = suggest_scale(medium.permittivity, medium.permeability,
                              sphere1.permittivity, sphere1.permeability,
                              sphere2.permittivity, sphere2.permeability)
    rtol = _getfloat(parser, "quadrature", "rtol", 1e-9) \
        if parser.has_section("quadrature") else 1e-9
    doublings = _getfloat(parser, "quadrature", "max_doublings", 10) \
        if parser.has_section("quadrature") else 10
    try:
        quadrature = QuadratureSpec(scale, rtol, int(doublings))
    except ValueError as exc:
        raise ConfigError(f"[quadrature]: {exc}") from exc

    samples = _getfloat(parser, "mc", "samples", 1e6) if parser.has_section("mc") else 1e6
    seed = _getfloat(parser, "mc", "seed", 0) if parser.has_section("mc") else 0
    chunks = _getfloat(parser, "mc", "chunks", 32) if parser.has_section("mc") else 32
    try:
        mc = MonteCarloSpec(int(samples), int(seed), int(chunks))
    except ValueError as exc:
        raise ConfigError(f"[mc]: {exc}") from exc

    return SystemConfig(medium, sphere1, sphere2, separation, species,
                        quadrature, mc)
