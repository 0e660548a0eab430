#  Copyright (c) doobcodes contributors 2026. All Rights Reserved.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at:
#
#       https://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
#  or implied. See the License for the specific language governing
#  permissions and limitations under the License.
"""Arithmetic in GF(4) and the inner products of GF(4)-vectors.

Field elements use the integer representation of `galois.GF(4)`: the element
`h * omega + l` is the integer `2 * h + l`, so 0, 1, omega, omega^2 are
0, 1, 2, 3. This is the bit-pair encoding 00, 01, 10, 11 of the appendix
matrices, and `omega^2 = omega + 1`.
"""
from typing import Sequence, Union

import galois
import numpy as np

from doobcodes.exceptions import ShapeMismatchError

GF4 = galois.GF(2**2)
GF2 = galois.GF(2)

ZERO = GF4(0)
ONE = GF4(1)
OMEGA = GF4(2)
OMEGA2 = GF4(3)

GF4Like = Union[int, "galois.FieldArray"]
GF4Vector = Union[Sequence[int], "galois.FieldArray", "np.ndarray"]


def as_gf4(values: GF4Vector) -> "galois.FieldArray":
    """Coerces integers, sequences or arrays to a GF(4) array."""
    if isinstance(values, GF4):
        return values
    return GF4(np.asarray(values, dtype=np.int64))


def gf4_add(a: GF4Like, b: GF4Like) -> "galois.FieldArray":
    """Addition in GF(4) (bitwise xor of the bit pairs)."""
    return GF4(a) + GF4(b)


def gf4_mul(a: GF4Like, b: GF4Like) -> "galois.FieldArray":
    """Multiplication in GF(4)."""
    return GF4(a) * GF4(b)


def gf4_inverse(a: GF4Like) -> "galois.FieldArray":
    """Multiplicative inverse of a nonzero element."""
    return GF4(a) ** -1


def conjugate(z: GF4Like) -> "galois.FieldArray":
    """Frobenius conjugation `z -> z^2`; fixes 0 and 1, swaps omega and
    omega^2."""
    return GF4(z) ** 2


def gf4_trace(z: GF4Like) -> int:
    """Absolute trace `Tr(z) = z + z^2`, an element of GF(2)."""
    value = GF4(z)
    return int(value + value**2)


def _check_lengths(x: "galois.FieldArray", y: "galois.FieldArray") -> None:
    if x.shape != y.shape:
        raise ShapeMismatchError(
            f"Vectors of lengths {x.shape} and {y.shape} cannot be paired."
        )


def hermitian_ip(x: GF4Vector, y: GF4Vector) -> "galois.FieldArray":
    """Hermitian inner product `sum_i x_i * y_i^2`.

    Raises:
        ShapeMismatchError: if the vectors differ in length.
    """
    xv, yv = as_gf4(x), as_gf4(y)
    _check_lengths(xv, yv)
    if xv.size == 0:
        return ZERO
    return GF4(np.add.reduce(xv * yv**2))


def trace_hermitian_ip(x: GF4Vector, y: GF4Vector) -> int:
    """Trace-Hermitian inner product `Tr(<x, y>)`.

    In bit-pair coordinates it is the symplectic form
    `sum_i x_hi * y_lo + x_lo * y_hi (mod 2)`.

    Raises:
        ShapeMismatchError: if the vectors differ in length.
    """
    return gf4_trace(hermitian_ip(x, y))


def hamming_weight(v: GF4Vector) -> int:
    """Number of nonzero coordinates."""
    return int(np.count_nonzero(np.asarray(v)))


def symplectic_matrix(n: int) -> "galois.FieldArray":
    """The `2n x 2n` GF(2) matrix `J` with `x J y^T` equal to the
    trace-Hermitian form of bit-pair vectors (hi bit first)."""
    swap = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        swap[2 * i, 2 * i + 1] = 1
        swap[2 * i + 1, 2 * i] = 1
    return GF2(swap)


def to_bits(v: GF4Vector) -> "np.ndarray":
    """Bit-pair expansion `(hi_0, lo_0, hi_1, lo_1, ...)` of a GF(4)
    vector."""
    values = np.asarray(v, dtype=np.int64)
    bits = np.empty(values.shape[:-1] + (2 * values.shape[-1],), np.int64)
    bits[..., 0::2] = values >> 1
    bits[..., 1::2] = values & 1
    return bits


def from_bits(bits: "np.ndarray") -> "galois.FieldArray":
    """Inverse of `to_bits`."""
    values = np.asarray(bits, dtype=np.int64)
    return GF4(2 * values[..., 0::2] + values[..., 1::2])
