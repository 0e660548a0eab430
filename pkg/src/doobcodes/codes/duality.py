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
"""Duals of additive codes.

Three forms are supported. The Doob form lives on every shape; the
trace-Hermitian and Hermitian forms need the shape `GF(4)^n` (Bi
coordinates only). Doob duals are solved over Z4 with `z4_left_kernel`,
the two GF(4) duals with `galois` over GF(2) and GF(4).
"""
import numpy as np

from doobcodes.alphabet.gf4 import GF2, GF4, symplectic_matrix
from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import doob_ip_rows, symbols_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.echelon import z4_left_kernel
from doobcodes.enums import CoordKind, InnerProductForm
from doobcodes.exceptions import IncompatibleFormError


def _require_gf4(code: AdditiveCode, what: str) -> None:
    if not code.shape.is_gf4:
        raise IncompatibleFormError(
            f"The {what} is only defined on GF(4)^n, not on {code.shape}."
        )


def _signs(shape: Shape) -> "np.ndarray":
    signs = np.ones(shape.width, dtype=np.int64)
    start, stop = shape.block(CoordKind.QUAD)
    signs[start + 1 : stop : 2] = -1
    return signs


def doob_dual(code: AdditiveCode) -> AdditiveCode:
    """Dual under the Doob inner product.

    Bi unknowns are written `y = 2u`; their term `x y / 2` becomes `x u`, so
    the system is linear over Z4 in `(y_Z4, u)`.
    """
    shape = code.shape
    gens = code.generator_rows()
    coefficients = gens * _signs(shape)
    kernel = z4_left_kernel(coefficients.T % 4)
    bi_mask = shape.bi_mask()
    kernel[:, bi_mask] = (2 * kernel[:, bi_mask]) % 4
    return AdditiveCode(shape, kernel)


def _bits(code: AdditiveCode) -> "np.ndarray":
    return (code.generator_rows() // 2).astype(np.int64)


def trace_hermitian_dual(code: AdditiveCode) -> AdditiveCode:
    """Dual under the trace-Hermitian form, a symplectic form over GF(2).

    Raises:
        IncompatibleFormError: unless the shape is `GF(4)^n`.
    """
    _require_gf4(code, "trace-Hermitian form")
    shape = code.shape
    if code.size == 1:
        return AdditiveCode.full(shape)
    bits = GF2(_bits(code))
    basis = (bits @ symplectic_matrix(shape.n_prime)).null_space()
    return AdditiveCode(shape, 2 * np.asarray(basis, dtype=np.int64))


def hermitian_dual(code: AdditiveCode) -> AdditiveCode:
    """Dual under the Hermitian inner product `sum x_i y_i^2`.

    The result is F4-linear; it is the Hermitian dual of the F4-span of the
    code, and equals the trace-Hermitian dual when the code is F4-linear.

    Raises:
        IncompatibleFormError: unless the shape is `GF(4)^n`.
    """
    _require_gf4(code, "Hermitian form")
    shape = code.shape
    if code.size == 1:
        return AdditiveCode.full(shape)
    matrix = GF4(symbols_of_rows(shape, code.generator_rows()))
    basis = matrix.null_space() ** 2
    rows = np.concatenate([basis, basis * GF4(2)])
    return AdditiveCode.from_digits(shape, np.asarray(rows, dtype=np.int64))


def dual(
    code: AdditiveCode, form: InnerProductForm = InnerProductForm.DOOB
) -> AdditiveCode:
    """Dual of a code under the given inner product.

    Raises:
        IncompatibleFormError: if the form is not defined on the shape.
    """
    if form == InnerProductForm.DOOB:
        return doob_dual(code)
    if form == InnerProductForm.TRACE_HERMITIAN:
        return trace_hermitian_dual(code)
    return hermitian_dual(code)


def gram_matrix(
    code: AdditiveCode, form: InnerProductForm = InnerProductForm.DOOB
) -> "np.ndarray":
    """Pairwise inner products of the stored generators.

    Doob values are in Z4, trace-Hermitian values in GF(2), Hermitian values
    are GF(4) integers.

    Raises:
        IncompatibleFormError: if the form is not defined on the shape.
    """
    gens = code.generator_rows()
    if form == InnerProductForm.DOOB:
        return doob_ip_rows(code.shape, gens[:, None, :], gens[None, :, :])
    _require_gf4(code, f"{form} form")
    if form == InnerProductForm.TRACE_HERMITIAN:
        bits = _bits(code)
        pairs = bits.reshape(len(bits), bits.shape[1] // 2, 2)
        swapped = pairs[:, :, ::-1].reshape(bits.shape)
        return (bits @ swapped.T) % 2
    symbols = GF4(symbols_of_rows(code.shape, gens))
    return np.asarray(symbols @ (symbols**2).T, dtype=np.int64)


def is_self_orthogonal(
    code: AdditiveCode, form: InnerProductForm = InnerProductForm.DOOB
) -> bool:
    """Whether the form vanishes on all pairs of codewords.

    Raises:
        IncompatibleFormError: if the form is not defined on the shape.
    """
    return not gram_matrix(code, form).any()


def is_self_dual(
    code: AdditiveCode, form: InnerProductForm = InnerProductForm.DOOB
) -> bool:
    """Self-orthogonal with `|C|^2 = |ambient|`.

    Raises:
        IncompatibleFormError: if the form is not defined on the shape.
    """
    return (
        is_self_orthogonal(code, form)
        and code.size**2 == code.shape.ambient_order
    )
