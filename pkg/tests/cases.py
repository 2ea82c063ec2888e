"""Shared corpus of concrete instances exercised across the test suite."""

from __future__ import annotations

from qsr import ParamSet, VarietyDescriptor, builtin

# (label, quiver name, alpha, lambdas, theta)
CORPUS = [
    ("a2", "a2", (1, 1), (), None),
    ("a3", "a3", (1, 1, 1), (), None),
    ("affa1-delta", "affa1", (1, 1), (), None),
    ("affa1-2delta", "affa1", (2, 2), (), None),
    ("affa1-generic", "affa1", (1, 1), ((1, -1),), None),
    ("affa2-delta", "affa2", (1, 1, 1), (), None),
    ("affd4-delta", "affd4", (2, 1, 1, 1, 1), (), None),
    ("jordan1-2", "jordan1", (2,), (), None),
    ("jordan1-3", "jordan1", (3,), (), None),
    ("jordan2-2", "jordan2", (2,), (), None),
    ("jordan2-3", "jordan2", (3,), (), None),
    ("jordan3-2", "jordan3", (2,), (), None),
]


def descriptor(label: str) -> VarietyDescriptor:
    for lab, name, alpha, lambdas, theta in CORPUS:
        if lab == label:
            q = builtin(name)
            params = ParamSet.make(lambdas, theta or (0,) * q.vertices)
            return VarietyDescriptor(q, alpha, params)
    raise KeyError(label)


def all_descriptors():
    return [(lab, descriptor(lab)) for lab, *_ in CORPUS]
