"""Reference values for the bundled 4x4 degree-3 example."""
import numpy as np

I = 1j

S0 = np.array([
    [1, I, -1, -I],
    [-I, 2, 2 * I, -2],
    [-1, -2 * I, 3, 3 * I],
    [I, -2, -3 * I, 4],
])
S1 = np.array([
    [8, -1 + 4 * I, -5 + I, 4 - 3 * I],
    [-1 - 4 * I, 6, 2 + I, -5 - 3 * I],
    [-5 - I, 2 - I, 4, -3],
    [4 + 3 * I, -5 + 3 * I, -3, 6],
])
S2 = np.array([
    [117, -56 + 41 * I, -87 + 26 * I, 86 - 15 * I],
    [-56 - 41 * I, 92, 63, -85 - 41 * I],
    [-87 - 26 * I, 63, 81, -69 - 26 * I],
    [86 + 15 * I, -85 + 41 * I, -69 + 26 * I, 102],
])

H0 = np.array([
    [1, I, -1, -I, 8],
    [-I, 2, 2 * I, -2, -1 - 4 * I],
    [-1, -2 * I, 3, 3 * I, -5 - I],
    [I, -2, -3 * I, 4, 4 + 3 * I],
    [8, -1 + 4 * I, -5 + I, 4 - 3 * I, 117],
])
H1 = np.array([
    [8, -1 + 4 * I, -5 + I],
    [-1 - 4 * I, 6, 2 + I],
    [-5 - I, 2 - I, 4],
])

# dominant part: coefficient of z, then constant
FD = np.array([
    [[1, 0, 0, 0], [0, 1, I, 0], [1, 0, 0, 0], [0, I, 1, 0]],
    [
        [-4 + 9 * I, 2 - 3 * I, -6 - 4 * I, -2],
        [12 + 17 * I, -2 + 4 * I, -2, 1 - I],
        [36 - I, -6 + 7 * I, -12 + 4 * I, 0],
        [-5 + 2 * I, 10 + 16 * I, 14 + 8 * I, -1 + I],
    ],
])
FS = np.array([
    [[1 - I, 2 + I, -1 + 3 * I, 0], [-2 * I, 4, 5 * I, 0], [1 + I, -2 + I, -1 - 3 * I, 0], [0, 0, 1, 0]],
    [
        [-57 + 43 * I, 0, 0, -2 - 2 * I],
        [-39 + 76 * I, 0, 0, -1 - 3 * I],
        [29 - 51 * I, 0, 0, 2 + 2 * I],
        [12 + 17 * I, 0, 0, -1 + I],
    ],
])

CDEG = (3, 2, 2, 1)

H0_EIGS = [118.1688, 7.6381, 0.8146, 0.3711, 0.0073]
H1_EIGS = [14.0143, 3.9496, 0.0361]
F_EIGS = [
    -8.1437, -0.7723,
    -0.3455 + 2.5642j, -0.3455 - 2.5642j,
    -0.1795 + 4.9232j, -0.1795 - 4.9232j,
    -0.0170 + 4.3356j, -0.0170 - 4.3356j,
]
R1_F_REFERENCE = 5.43e-4
