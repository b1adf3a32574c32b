import numpy as np
from scipy.spatial.transform import Rotation

SQRT3 = np.sqrt(3.0)

CUBE_FACE = np.array([(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (1, -1, 1)]) / SQRT3
OCTANT = np.eye(3)


def random_unit(rng, n=None):
    shape = (3,) if n is None else (n, 3)
    v = rng.normal(size=shape)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_rotation(rng):
    return Rotation.random(random_state=rng).as_matrix()


def circle_points(theta, n):
    phi = np.arange(n) * 2.0 * np.pi / n
    return np.column_stack((np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi),
                            np.full(n, np.cos(theta))))
