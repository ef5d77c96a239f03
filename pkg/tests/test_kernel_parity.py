"""The compiled kernel and the pure-Python kernel must agree exactly."""

import random

import pytest

from coxwalk import _kernel_py as pure
from coxwalk.algebra import field_for_lcm

try:
    from coxwalk import _kernel_cy as compiled
except ImportError:
    compiled = None

pytestmark = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


FIELD = field_for_lcm(30)
MP_LOW = FIELD._mp_low
D = FIELD.degree


def _vec(rng, span=10**6):
    return tuple(rng.randint(-span, span) for _ in range(D))


def test_poly_mul_mod_parity():
    rng = random.Random(0)
    for _ in range(300):
        a, b = _vec(rng), _vec(rng)
        assert pure.poly_mul_mod(a, b, MP_LOW) == compiled.poly_mul_mod(a, b, MP_LOW)


def test_normalize_parity():
    rng = random.Random(1)
    for _ in range(300):
        nums = [rng.randint(-999, 999) * rng.choice([1, 2, 6, 30]) for _ in range(D)]
        den = rng.randint(1, 10**6)
        assert pure.normalize(list(nums), den) == compiled.normalize(list(nums), den)
    assert compiled.normalize([0] * D, 7) == (tuple([0] * D), 1)


def test_dot_mod_parity():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 6)
        an = [_vec(rng, 999) for _ in range(n)]
        bn = [_vec(rng, 999) for _ in range(n)]
        ad = [rng.randint(1, 60) for _ in range(n)]
        bd = [rng.randint(1, 60) for _ in range(n)]
        assert pure.dot_mod(an, ad, bn, bd, MP_LOW) == compiled.dot_mod(
            an, ad, bn, bd, MP_LOW
        )


def test_interval_sign_parity():
    rng = random.Random(3)
    lo, hi, shift = FIELD._iso
    for _ in range(500):
        nums = _vec(rng, 50)
        assert pure.interval_sign(nums, lo, hi, shift) == compiled.interval_sign(
            nums, lo, hi, shift
        )


def test_eval_sign_parity():
    rng = random.Random(4)
    mp = FIELD.minpoly
    for _ in range(500):
        num = rng.randint(-(2**40), 2**40)
        shift = rng.randint(0, 38)
        assert pure.eval_sign_at_dyadic(mp, num, shift) == compiled.eval_sign_at_dyadic(
            mp, num, shift
        )


def test_backends_report_names():
    assert pure.BACKEND == "pure"
    assert compiled.BACKEND == "compiled"


def test_pure_env_forces_fallback():
    import os
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "import coxwalk; print(coxwalk.KERNEL_BACKEND)"],
        env={**os.environ, "COXWALK_PURE": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "pure"
