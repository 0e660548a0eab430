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
"""Lifting of additive GF(4) codes to `D(6, 0+0)`.

A GF(4) code of length 6 embeds into `D(6, 0+0)` by doubling its bits;
the image has only order-2 codewords. A codeword `b` is liftable when some
`c` with `2c = b` spans, together with the code, a code whose nonzero Doob
weights all lie in `{6, 8, 10, 12}`. A code of diameter 12 with these
weights would need a dimension-7 code with at least `2^5 - 1` liftable
codewords, or a dimension-6 code whose rows lift jointly.
"""
import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import weights_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.operations import bits_to_2z4
from doobcodes.codes.weights import codeword_weights, min_distance
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.constants import DEFAULT_THREADS
from doobcodes.corpus.code_format import CodeRecord, read_records
from doobcodes.corpus.manifest import data_path
from doobcodes.enums import Metric
from doobcodes.exceptions import (
    CorpusVerificationError,
    IncompatibleFormError,
    PreconditionError,
)
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

LIFT_WEIGHTS: Tuple[int, ...] = (6, 8, 10, 12)
LIFTABLE_THRESHOLD = 2**5 - 1
LIFTED_TYPES = ((2, 5), (1, 6))
LIFT_LENGTH = 6

LiftInput = Union[CodeRecord, AdditiveCode]


def _even_coset_representatives(code: AdditiveCode) -> "np.ndarray":
    """One vector with even components per coset of the code."""
    width = code.shape.width
    bits = np.array(list(itertools.product((0, 2), repeat=width)))
    return np.unique(code.reduce(bits), axis=0)


def lifts(
    code: AdditiveCode,
    row: "np.ndarray",
    weights: Sequence[int] = LIFT_WEIGHTS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> "np.ndarray":
    """Vectors `c` with `2c = row` that extend the code within a weight
    whitelist.

    Args:
        code: A code of a shape without Bi coordinates.
        row: A nonzero codeword with even components.
        weights: Allowed nonzero Doob weights of the extended code.
        budgets: Limits for codeword enumeration.

    Returns:
        Array of lifts, one per coset of the code.

    Raises:
        IncompatibleFormError: if the shape has Bi coordinates.
        PreconditionError: if the row is zero, odd or not a codeword.
    """
    if code.shape.n_prime:
        raise IncompatibleFormError(
            f"Lifting needs Z4 coordinates only, got {code.shape}."
        )
    row = np.asarray(row, dtype=np.int64) % 4
    odd = bool((row % 2).any())
    if not row.any() or odd or not code.contains_rows(row[None])[0]:
        raise PreconditionError("Only nonzero order-2 codewords can be lifted.")
    base = (row // 2 + _even_coset_representatives(code)) % 4
    words = code.codewords(budgets).astype(np.int64)
    translates = (base[:, None, :] + words[None, :, :]) % 4
    found = weights_of_rows(
        code.shape, translates.reshape(-1, code.shape.width)
    ).reshape(base.shape[0], words.shape[0])
    return base[np.isin(found, weights).all(axis=1)]


def is_liftable(
    code: AdditiveCode,
    row: "np.ndarray",
    weights: Sequence[int] = LIFT_WEIGHTS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> bool:
    """Whether a codeword has at least one lift."""
    return bool(lifts(code, row, weights, budgets).shape[0])


def liftable_codewords(
    code: AdditiveCode,
    weights: Sequence[int] = LIFT_WEIGHTS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> "np.ndarray":
    """The nonzero order-2 codewords that are liftable."""
    words = code.codewords(budgets)
    candidates = [
        word for word in words if word.any() and not (word % 2).any()
    ]
    liftable = [
        word
        for word in candidates
        if is_liftable(code, word, weights, budgets)
    ]
    return np.array(liftable, dtype=np.uint8).reshape(-1, code.shape.width)


def lift_rows(
    code: AdditiveCode,
    rows: "np.ndarray",
    weights: Sequence[int] = LIFT_WEIGHTS,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[int]:
    """Lifts rows one after the other.

    Stage `i` lifts row `i` in every code of stage `i - 1`; codes that are
    equal as sets are kept once.

    Returns:
        Number of distinct codes after each stage, stopping at the first
        stage without any.
    """
    current = [code]
    counts: List[int] = []
    for row in np.asarray(rows):
        found: Dict[bytes, AdditiveCode] = {}
        for parent in current:
            for lift in lifts(parent, row, weights, budgets):
                child = parent.with_rows(lift[None, :])
                found.setdefault(child.to_bytes(), child)
        current = list(found.values())
        counts.append(len(current))
        if not current:
            break
    return counts


class LiftingReport(NamedTuple):
    """Outcome of `lift_diameter12`.

    Attributes:
        all_rows_liftable: Indices of the dimension-6 codes whose generator
            rows are each liftable.
        hamming_distances: Minimum Hamming distance of each of those codes.
        joint_stages: Codes per stage of the row-by-row lifting of each of
            those codes.
        jointly_liftable: Those codes whose rows lift all together.
        liftable_counts: Number of liftable codewords of every dimension-7
            code, in input order.
    """

    all_rows_liftable: List[int]
    hamming_distances: Dict[int, int]
    joint_stages: Dict[int, List[int]]
    jointly_liftable: List[int]
    liftable_counts: List[int]

    @property
    def liftable_count_histogram(self) -> Dict[int, int]:
        histogram: Dict[int, int] = {}
        for count in self.liftable_counts:
            histogram[count] = histogram.get(count, 0) + 1
        return dict(sorted(histogram.items(), reverse=True))

    @property
    def dimension7_excluded(self) -> bool:
        """Whether every dimension-7 code has too few liftable codewords."""
        return all(count < LIFTABLE_THRESHOLD for count in self.liftable_counts)


def as_record(item: LiftInput) -> CodeRecord:
    """A record of a code; the rows of a bare code are its stored
    generators."""
    if isinstance(item, CodeRecord):
        record = item
    else:
        record = CodeRecord(
            shape=item.shape,
            rows=item.generator_rows().astype(np.uint8),
            order4_rows=item.group_type[0],
            label=None,
            line=0,
        )
    if record.shape != Shape.gf4(LIFT_LENGTH):
        raise PreconditionError(
            f"Lifting starts from codes in GF(4)^{LIFT_LENGTH}, got "
            f"{record.shape}."
        )
    return record


def split_by_dimension(
    items: Sequence[LiftInput],
) -> Tuple[List[CodeRecord], List[CodeRecord]]:
    """Dimension-6 and dimension-7 codes of a mixed input, e.g. the
    representatives written by a Hamming classification.

    Raises:
        PreconditionError: for codes of another length or dimension.
    """
    split: Dict[int, List[CodeRecord]] = {6: [], 7: []}
    for item in items:
        record = as_record(item)
        dimension = record.code.dimension
        if dimension not in split:
            raise PreconditionError(
                f"Lifting takes codes of dimension 6 or 7, got {dimension}."
            )
        split[dimension].append(record)
    return split[6], split[7]


def _rows_liftable(record: CodeRecord, budgets: Budgets) -> bool:
    code = bits_to_2z4(record.code)
    return all(is_liftable(code, row, budgets=budgets) for row in record.rows)


def _liftable_count(record: CodeRecord, budgets: Budgets) -> int:
    return int(
        liftable_codewords(bits_to_2z4(record.code), budgets=budgets).shape[0]
    )


def lift_diameter12(
    records6: Optional[Sequence[LiftInput]] = None,
    records7: Optional[Sequence[LiftInput]] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = DEFAULT_THREADS,
) -> LiftingReport:
    """Runs the lifting tests on the `(6, 2^6, 3)_4` and `(6, 2^7, 3)_4`
    classes.

    Rows are taken as written in the records, so the row-by-row lifting
    follows the printed generator matrices. Codes given without a record,
    such as the representatives of `classify_hamming`, are lifted along
    their stored generators.

    Args:
        records6: Dimension-6 codes; the shipped 646 classes by default.
        records7: Dimension-7 codes; the shipped 14 classes by default.
        budgets: Limits for codeword enumeration.
        threads: Worker threads, 0 meaning one per CPU.
    """
    start = time.time()
    if records6 is None:
        records6 = read_records(data_path("appendix_b/dim6.codes"))
    if records7 is None:
        records7 = read_records(data_path("appendix_b/dim7.codes"))
    records6 = [as_record(item) for item in records6]
    records7 = [as_record(item) for item in records7]
    with ThreadPoolExecutor(max_workers=threads or None) as pool:
        liftable = list(
            pool.map(lambda record: _rows_liftable(record, budgets), records6)
        )
        counts = list(
            pool.map(lambda record: _liftable_count(record, budgets), records7)
        )
    chosen = [index for index, flag in enumerate(liftable) if flag]
    distances: Dict[int, int] = {}
    stages: Dict[int, List[int]] = {}
    for index in chosen:
        record = records6[index]
        distances[index] = int(
            min_distance(record.code, Metric.HAMMING, budgets)
        )
        stages[index] = lift_rows(
            bits_to_2z4(record.code), record.rows, budgets=budgets
        )
        logger.debug(
            "Code %d: distance %d, lifting stages %s.",
            index + 1,
            distances[index],
            stages[index],
        )
    report = LiftingReport(
        all_rows_liftable=chosen,
        hamming_distances=distances,
        joint_stages=stages,
        jointly_liftable=[
            index
            for index in chosen
            if len(stages[index]) == len(records6[index].rows)
            and stages[index][-1] > 0
        ],
        liftable_counts=counts,
    )
    logger.info(
        "Lifting: %d of %d dimension-6 codes have liftable rows, jointly "
        "liftable: %s; liftable codewords of the %d dimension-7 codes: %s "
        "(%s).",
        len(chosen),
        len(records6),
        report.jointly_liftable,
        len(records7),
        report.liftable_count_histogram,
        get_human_readable_time(time.time() - start),
    )
    return report


def verify_lifted_markup(
    lifted: Optional[Sequence[AdditiveCode]] = None,
    codes7: Optional[Sequence[AdditiveCode]] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Dict[Tuple[int, int], int]:
    """Checks the lifts of the dimension-7 codes.

    Each lifted code must contain the embedding of its dimension-7 code,
    have a type in `LIFTED_TYPES` and nonzero weights in `LIFT_WEIGHTS`.

    Returns:
        Number of lifted codes per group type.

    Raises:
        CorpusVerificationError: on the first code failing a check.
    """
    if lifted is None:
        path = data_path("appendix_b/dim7_lifted.codes")
        lifted = [record.code for record in read_records(path)]
    if codes7 is None:
        codes7 = [
            record.code
            for record in read_records(data_path("appendix_b/dim7.codes"))
        ]
    if len(lifted) != len(codes7):
        raise CorpusVerificationError(
            f"{len(lifted)} lifted codes for {len(codes7)} codes."
        )
    types: Dict[Tuple[int, int], int] = {}
    for number, (code, base) in enumerate(zip(lifted, codes7), start=1):
        if not bits_to_2z4(base).is_subcode_of(code):
            raise CorpusVerificationError(
                f"Lifted code {number} does not contain its base code."
            )
        if code.group_type not in LIFTED_TYPES:
            raise CorpusVerificationError(
                f"Lifted code {number} has type {code.group_type}."
            )
        weights = set(codeword_weights(code, budgets=budgets)[1:].tolist())
        if not weights <= set(LIFT_WEIGHTS):
            raise CorpusVerificationError(
                f"Lifted code {number} has weights {sorted(weights)}."
            )
        types[code.group_type] = types.get(code.group_type, 0) + 1
    return types


__all__ = [
    "LIFTABLE_THRESHOLD",
    "LIFTED_TYPES",
    "LIFT_LENGTH",
    "LIFT_WEIGHTS",
    "LiftInput",
    "LiftingReport",
    "as_record",
    "is_liftable",
    "lift_diameter12",
    "lift_rows",
    "liftable_codewords",
    "lifts",
    "split_by_dimension",
    "verify_lifted_markup",
]
