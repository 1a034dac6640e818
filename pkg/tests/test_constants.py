import dataclasses
import json
import math

import pytest

from matterwave.constants import (
    BUILTIN_REGISTRY,
    NATURAL,
    SI,
    Particle,
    PhysicalConstants,
    UnitSystem,
    UnknownParticleError,
    get_constants,
    load_particle_config,
    lookup_particle,
)


@pytest.mark.parametrize("constants", [SI, NATURAL], ids=["si", "natural"])
def test_h_is_two_pi_hbar(constants):
    assert abs(constants.h - 2.0 * math.pi * constants.hbar) <= 1e-12 * constants.h


@pytest.mark.parametrize("constants", [SI, NATURAL], ids=["si", "natural"])
def test_all_constants_positive(constants):
    for field in ("hbar", "h", "c", "e_charge", "epsilon0", "G"):
        assert getattr(constants, field) > 0.0


def test_si_anchor_values():
    assert SI.h == 6.62607015e-34
    assert SI.c == 299792458.0
    assert SI.e_charge == 1.602176634e-19


def test_natural_mode_sets_hbar_c_to_one():
    assert NATURAL.hbar == 1.0
    assert NATURAL.c == 1.0
    # Gaussian-style electrostatics: 4*pi*epsilon0 = 1
    assert abs(4.0 * math.pi * NATURAL.epsilon0 - 1.0) <= 1e-15


def test_inconsistent_h_hbar_rejected():
    with pytest.raises(ValueError, match="2\\*pi\\*hbar"):
        PhysicalConstants(hbar=1.0, h=6.0, c=1.0, e_charge=1.0, epsilon0=1.0, G=1.0)


def test_nonpositive_constant_rejected():
    with pytest.raises(ValueError, match="c must be"):
        PhysicalConstants(hbar=1.0, h=2 * math.pi, c=0.0, e_charge=1.0, epsilon0=1.0, G=1.0)


def test_get_constants_accepts_enum_and_string():
    assert get_constants(UnitSystem.SI) is SI
    assert get_constants("natural") is NATURAL


def test_lookup_registry_masses():
    assert lookup_particle("proton").mass == 1.673e-27
    assert lookup_particle("electron").mass == 9.109e-31
    assert lookup_particle("pen").mass == 1.0e-2


def test_lookup_unknown_name_lists_available():
    with pytest.raises(UnknownParticleError) as err:
        lookup_particle("unobtainium")
    message = str(err.value)
    for name in ("electron", "proton", "pen"):
        assert name in message


def test_lookup_is_deterministic_and_masses_positive():
    for particle in BUILTIN_REGISTRY:
        assert particle.mass > 0.0
        assert lookup_particle(particle.name) == particle
        assert lookup_particle(particle.name) == lookup_particle(particle.name)


def test_particle_is_immutable():
    particle = lookup_particle("electron")
    with pytest.raises(dataclasses.FrozenInstanceError):
        particle.mass = 1.0


def test_nonpositive_mass_rejected():
    with pytest.raises(ValueError, match="mass > 0"):
        Particle("ghost", 0.0)


def test_registry_extension_from_config(tmp_path):
    path = tmp_path / "extra.json"
    path.write_text(json.dumps({"muon": 1.883e-28}))
    registry = load_particle_config(path)
    assert registry.lookup("muon").mass == 1.883e-28
    # builtin entries survive the extension
    assert registry.lookup("electron").mass == 9.109e-31
    # and the builtin registry itself is untouched
    assert "muon" not in BUILTIN_REGISTRY


def test_registry_config_rejects_bad_entries(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"blob": "heavy"}))
    with pytest.raises(ValueError, match="blob"):
        load_particle_config(path)
    path.write_text(json.dumps([1, 2, 3]))
    with pytest.raises(ValueError, match="JSON object"):
        load_particle_config(path)
    path.write_text(json.dumps({"blob": -1.0}))
    with pytest.raises(ValueError, match="mass > 0"):
        load_particle_config(path)
