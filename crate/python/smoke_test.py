"""Smoke test for the Python extension. Build it first with
`pip install --no-build-isolation ./crates/py` (or `maturin develop`)."""

import ultracrystal as uc

b1 = uc.enumerate(1)
assert len(b1) == 15
assert len(uc.enumerate(2)) == 92
assert [b.t for b in uc.minimal_elements(1)] == [[0] * 6, [0, 1, 1, 1, 1, 0]]

z = uc.BElement([0] * 6)
assert z.level is None and z.f(1).t == [-3, 3, 0, 0, 0, 0]
assert all(b.level == 1 for b in b1)
assert uc.BElement([3, 0, 0, 0, 0, 0], level=1).f(0) is None
assert z.eps(0) == 0 and z.weight() == [0, 0, 0]
assert uc.BElement([0] * 6, level=1).eps(0) == 1
try:
    uc.BElement([1, 0, 0, 0, 0, 0])
except ValueError:
    pass
else:
    raise AssertionError("congruence violation accepted")

x = uc.XPoint([0] * 6)
assert x.f(0).x == [1, 1, 3, 2, 3, 1]
assert x.f0_case() == "f1"
assert x.f(2).e(2) == x
y = uc.XPoint([1, -2, 0, 3, -1, 2])
assert y.omega().f(1) == y.f(1).omega()
assert uc.omega_inv(y.omega()) == y
assert y.act(1, 2).act(1, -3) == y.act(1, -1)

rep = uc.verify_iso(1)
assert rep["pass"] and rep["points_checked"] == 729
assert uc.verify_ud(1, 1)["pass"]
assert uc.verify_geom(samples=2, seed=3)["pass"]
assert uc.perfect_check(1)["pass"]

assert uc.tropicalize("c*x + x^2 + 1", fixed={"c": -1}) == "max(0, 2*x)"
assert uc.trop_eval("x/y + 1", {"x": 3, "y": 1}) == 2

print("python smoke test passed")
