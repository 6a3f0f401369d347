"""Frozen worked instances used by tests, the CLI data files, and the docs.

M1     the 2-dimensional model with q(e1) = q(e2) = e and b(e1,e2) = t^2;
       its interval [ray(e1), ray(e2)] carries the standard three-region
       CS profile with breakpoints t^-2 and t^2.
M3     the 3-dimensional model with an isotropic first basis vector, used
       for the entrance-stratum analysis (case C2b, bound t^1).
WALL   a 3-dimensional extension of M1 whose boundary stratum {f1 = f2} is
       an L-shaped set (a diagonal wall joined to a plateau); it admits
       multi-step junction processes and verified butterflies.
CHART  a model realizing eight strata of the canonical five-function family,
       frozen together with sample rays, one per stratum.
"""

from __future__ import annotations

from .quadspace import QuadraticPair, Vector
from .rays import Ray, RayInterval
from .strata import BasicFunction, example_family

M1 = QuadraticPair.from_rows(["0", "0"], [["0", "2"], ["2", "0"]])

M3 = QuadraticPair.from_rows(
    ["-inf", "0", "0"],
    [["-inf", "1", "-inf"],
     ["1", "0", "0"],
     ["-inf", "0", "0"]])

# as M3 but with eta = e2 orthogonal to eps3: entrance case C1
M3_C1 = QuadraticPair.from_rows(
    ["-inf", "0", "0"],
    [["-inf", "1", "-inf"],
     ["1", "0", "-inf"],
     ["-inf", "-inf", "0"]])

WALL = QuadraticPair.from_rows(
    ["0", "0", "0"],
    [["0", "2", "0"],
     ["2", "0", "0"],
     ["0", "0", "0"]])

CHART = QuadraticPair.from_rows(
    ["0", "0", "0"],
    [["0", "2", "-inf"],
     ["2", "0", "0"],
     ["-inf", "0", "0"]])


def m1_interval() -> RayInterval:
    return RayInterval(Ray(Vector.unit(2, 0)), Ray(Vector.unit(2, 1)))


def m1_family():
    interval = m1_interval()
    return (BasicFunction.cs(interval.y1), BasicFunction.cs(interval.y2))


def wall_interval() -> RayInterval:
    return RayInterval(Ray(Vector.unit(3, 0)), Ray(Vector.unit(3, 1)))


def wall_family():
    interval = wall_interval()
    return (BasicFunction.cs(interval.y1), BasicFunction.cs(interval.y2))


def wall_scenario():
    """(W, W', U) giving a one-step junction and a verified butterfly."""
    w = Ray(Vector.parse(["0", "-8", "-4"]))
    w_prime = Ray(Vector.parse(["0", "-1", "-6"]))
    u = Ray(Vector.parse(["-6", "-6", "0"]))
    return w, w_prime, u


def chart_interval() -> RayInterval:
    return RayInterval(Ray(Vector.unit(3, 0)), Ray(Vector.unit(3, 1)))


def chart_family():
    interval = chart_interval()
    return example_family(CHART, interval.y1, interval.y2)


def chart_sample():
    """One ray per realized stratum, ordered by the ratio b(y1,-)/b(y2,-).

    The model bounds the ratio by t^2 (its largest column ratio), so the
    seven classes below exhaust the partition: four threshold classes
    (ratio 0, t^-2, e, t^2) interleaved with three open ones.
    """
    rows = [
        ["-inf", "-inf", "0"],   # ratio 0
        ["-5", "-inf", "0"],     # ratio t^-5
        ["-2", "-inf", "0"],     # ratio t^-2 (threshold)
        ["0", "-1", "-inf"],     # ratio t^-1
        ["0", "0", "-inf"],      # ratio e (threshold)
        ["0", "1", "-inf"],      # ratio t^1
        ["0", "2", "-inf"],      # ratio t^2 (threshold)
    ]
    return [Ray(Vector.parse(r)) for r in rows]


# chart (six ascending profile classes) against which criterion 8 tests
# isomorphism: seven direct derivations among A, dA, B, dB, E, dE
CHART_TARGET_NODES = ("A", "dA", "B", "dB", "E", "dE")
CHART_TARGET_EDGES = (
    ("A", "E"), ("A", "dA"), ("E", "dE"), ("dA", "dE"),
    ("B", "dA"), ("B", "dB"), ("dB", "dE"),
)
