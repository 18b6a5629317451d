"""Axis-aligned boxes and uniform node-centered Cartesian grids.

Grids include their boundary nodes; integration uses trapezoidal weights so
that summing a constant reproduces the box volume exactly.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError


@dataclass(frozen=True)
class Box:
    """Axis-aligned box [lo, hi] in R^3."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        if lo.shape != (3,) or hi.shape != (3,):
            raise ConfigurationError("box corners must be 3-vectors")
        if not np.all(hi > lo):
            raise ConfigurationError(f"degenerate box: lo={lo}, hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def extent(self):
        return self.hi - self.lo

    @property
    def volume(self):
        return float(np.prod(self.extent))

    def contains(self, points, margin=0.0):
        pts = np.atleast_2d(points)
        return np.all((pts >= self.lo + margin) & (pts <= self.hi - margin), axis=1)


def unit_box():
    return Box(np.zeros(3), np.ones(3))


@dataclass(frozen=True)
class Grid:
    """Uniform node-centered grid on a box, boundary nodes included."""

    box: Box
    shape: tuple

    def __post_init__(self):
        shape = tuple(int(n) for n in self.shape)
        if len(shape) != 3 or any(n < 2 for n in shape):
            raise ConfigurationError(f"grid shape must be three counts >= 2, got {shape}")
        object.__setattr__(self, "shape", shape)

    @classmethod
    def cubic(cls, box, resolution):
        return cls(box, (resolution, resolution, resolution))

    @property
    def spacing(self):
        n = np.array(self.shape, dtype=float)
        return self.box.extent / (n - 1.0)

    @property
    def n_nodes(self):
        return int(np.prod(self.shape))

    def axes(self):
        return tuple(
            np.linspace(self.box.lo[d], self.box.hi[d], self.shape[d]) for d in range(3)
        )

    def nodes(self):
        """All node coordinates, shape (nx, ny, nz, 3)."""
        ax, ay, az = self.axes()
        X, Y, Z = np.meshgrid(ax, ay, az, indexing="ij")
        return np.stack([X, Y, Z], axis=-1)

    def trapezoid_weights(self):
        """Per-node quadrature weights; they sum exactly to the box volume."""
        w = []
        for d in range(3):
            wd = np.ones(self.shape[d])
            wd[0] = wd[-1] = 0.5
            w.append(wd * self.spacing[d])
        return w[0][:, None, None] * w[1][None, :, None] * w[2][None, None, :]

    def boundary_mask(self):
        m = np.zeros(self.shape, dtype=bool)
        m[0, :, :] = m[-1, :, :] = True
        m[:, 0, :] = m[:, -1, :] = True
        m[:, :, 0] = m[:, :, -1] = True
        return m

    def flat_index(self, i, j, k):
        ny, nz = self.shape[1], self.shape[2]
        return (i * ny + j) * nz + k
