"""Prolate spheroids, surface quadrature, and anchoring tensors.

The reference spheroid has its symmetry (long) axis along z; `a` is the polar
semi-axis and `b` the equatorial one, with a >= b > 0.  Surface integrals use
Gauss-Legendre nodes in cos(polar angle) times a uniform midpoint rule in
azimuth, which is spectrally accurate for surfaces of revolution.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, GeometryError

ROTATION_TOL = 1e-12


def as_rotation(mat):
    """Validate a proper rotation matrix (R R^T = I, det R = 1) and return it."""
    R = np.asarray(mat, dtype=float)
    if R.shape != (3, 3):
        raise GeometryError(f"rotation must be 3x3, got shape {R.shape}")
    if np.max(np.abs(R @ R.T - np.eye(3))) > 1e-10:
        raise GeometryError("matrix is not orthogonal within tolerance")
    if abs(np.linalg.det(R) - 1.0) > 1e-10:
        raise GeometryError("matrix is not a proper rotation (det != 1)")
    return R


def rotation_about_axis(axis, angle):
    """Rodrigues rotation by `angle` about the (not necessarily unit) `axis`."""
    k = np.asarray(axis, dtype=float)
    nrm = np.linalg.norm(k)
    if nrm == 0.0:
        raise GeometryError("rotation axis must be nonzero")
    k = k / nrm
    K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)


def random_rotation(rng):
    """Uniform rotation on SO(3) via a normalized Gaussian quaternion."""
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def prolate_surface_area(a, b):
    """Closed-form surface area of a prolate spheroid (polar a >= equatorial b)."""
    if not (a >= b > 0):
        raise GeometryError(f"need a >= b > 0, got a={a}, b={b}")
    e2 = 1.0 - (b / a) ** 2
    if e2 < 1e-12:
        # asin(e)/e expanded to avoid 0/0 for near-spheres
        return 2 * np.pi * b * b * (1.0 + (a / b) * (1.0 + e2 / 6.0 + 3 * e2 * e2 / 40.0))
    e = np.sqrt(e2)
    return 2 * np.pi * b * b * (1.0 + a / (b * e) * np.arcsin(e))


@dataclass(frozen=True)
class Spheroid:
    """Prolate spheroid: center, polar semi-axis a, equatorial semi-axis b,
    and a rotation mapping the reference z-axis to the symmetry axis."""

    center: np.ndarray = field(default_factory=lambda: np.zeros(3))
    a: float = 1.0
    b: float = 1.0
    rotation: np.ndarray = field(default_factory=lambda: np.eye(3))

    def __post_init__(self):
        center = np.asarray(self.center, dtype=float).reshape(3)
        if not (self.b > 0 and self.a >= self.b):
            raise GeometryError(
                f"invalid spheroid: need a >= b > 0, got a={self.a}, b={self.b}"
            )
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "rotation", as_rotation(self.rotation))

    @property
    def volume(self):
        return 4.0 * np.pi * self.a * self.b * self.b / 3.0

    @property
    def surface_area(self):
        return prolate_surface_area(self.a, self.b)

    def to_reference(self, points):
        """Map world points into the unrotated, centered particle frame."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return (pts - self.center) @ self.rotation  # (x - c) R == R^T (x - c)

    def implicit(self, points):
        """x'^2/b^2 + y'^2/b^2 + z'^2/a^2 - 1 in the particle frame."""
        q = self.to_reference(points)
        return (q[:, 0] ** 2 + q[:, 1] ** 2) / self.b**2 + q[:, 2] ** 2 / self.a**2 - 1.0

    def contains(self, points, tol=0.0):
        return self.implicit(points) <= tol

    def scaled(self, factor):
        return Spheroid(self.center, self.a * factor, self.b * factor, self.rotation)

    def rotated(self, Q):
        Q = as_rotation(Q)
        return Spheroid(Q @ self.center, self.a, self.b, Q @ self.rotation)


@dataclass(frozen=True)
class SurfaceQuadrature:
    """Quadrature nodes on a spheroid surface with outward unit normals and
    positive area weights summing to the surface area."""

    nodes: np.ndarray
    normals: np.ndarray
    weights: np.ndarray

    @property
    def total_area(self):
        return float(np.sum(self.weights))


def make_surface_quadrature(s: Spheroid, n_polar=64, n_azimuthal=128):
    """Product quadrature on the surface of `s` in world coordinates.

    Gauss-Legendre in u = cos(theta) with n_polar nodes, uniform midpoint rule
    in azimuth with n_azimuthal nodes.  The surface element for the reference
    spheroid is b*sqrt(a^2 (1-u^2) + b^2 u^2) du dphi.
    """
    if n_polar < 4 or n_azimuthal < 4:
        raise ConfigurationError("need n_polar >= 4 and n_azimuthal >= 4")
    a, b = s.a, s.b
    u, wu = np.polynomial.legendre.leggauss(int(n_polar))
    phi = (np.arange(n_azimuthal) + 0.5) * (2.0 * np.pi / n_azimuthal)
    wphi = 2.0 * np.pi / n_azimuthal

    U, PHI = np.meshgrid(u, phi, indexing="ij")
    WU = np.broadcast_to(wu[:, None], U.shape)
    st = np.sqrt(1.0 - U**2)

    x = b * st * np.cos(PHI)
    y = b * st * np.sin(PHI)
    z = a * U
    nodes_ref = np.stack([x, y, z], axis=-1).reshape(-1, 3)

    nrm = np.stack([x / b**2, y / b**2, z / a**2], axis=-1).reshape(-1, 3)
    nrm /= np.linalg.norm(nrm, axis=1, keepdims=True)

    jac = b * np.sqrt(a**2 * (1.0 - U**2) + b**2 * U**2)
    weights = (WU * wphi * jac).reshape(-1)

    nodes = s.center + nodes_ref @ s.rotation.T
    normals = nrm @ s.rotation.T
    return SurfaceQuadrature(nodes=nodes, normals=normals, weights=weights)


def anchoring_tensor(s: Spheroid, q: SurfaceQuadrature = None, n_polar=64, n_azimuthal=128):
    """Surface integral of nu (x) nu over the spheroid boundary (world frame).

    Symmetric positive semidefinite; its trace equals the surface area.
    """
    if q is None:
        q = make_surface_quadrature(s, n_polar, n_azimuthal)
    T = np.einsum("q,qi,qj->ij", q.weights, q.normals, q.normals)
    return 0.5 * (T + T.T)


def anchoring_eigenvalues(s: Spheroid, n_polar=64, n_azimuthal=128):
    """Eigenvalues (lambda1, lambda2) of the anchoring tensor.

    lambda1 belongs to the symmetry-axis eigenvector and lambda2 is the double
    transverse eigenvalue; lambda1 + 2*lambda2 equals the surface area.  For a
    prolate spheroid lambda1 < lambda2, vanishing relative to lambda2 as the
    aspect ratio grows.
    """
    ref = Spheroid(np.zeros(3), s.a, s.b, np.eye(3))
    quad = make_surface_quadrature(ref, n_polar, n_azimuthal)
    lam1 = float(np.sum(quad.weights * quad.normals[:, 2] ** 2))
    lam2 = 0.5 * (quad.total_area - lam1)
    return lam1, lam2
