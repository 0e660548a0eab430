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
"""Verification of the shipped code corpus against its manifest."""
import time
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.weights import codeword_weights
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.corpus.manifest import CorpusBucket, CorpusManifest
from doobcodes.equivalence.class_store import ClassStore
from doobcodes.exceptions import CorpusVerificationError
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)


class BucketReport(BaseModel):
    """Outcome of the checks of one bucket."""

    name: str
    expected: int
    found: int
    violations: List[str] = []
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


class CorpusReport(BaseModel):
    """Outcome of the checks of a whole corpus."""

    buckets: List[BucketReport] = []

    @property
    def violations(self) -> List[str]:
        return [v for bucket in self.buckets for v in bucket.violations]

    @property
    def ok(self) -> bool:
        return not self.violations


def _code_violations(
    bucket: CorpusBucket, code: AdditiveCode, where: str, budgets: Budgets
) -> List[str]:
    found: List[str] = []
    if code.shape != bucket.ambient:
        return [f"{where}: shape {code.shape}, expected {bucket.ambient}"]
    if bucket.size is not None and code.size != bucket.size:
        found.append(f"{where}: size {code.size}, expected {bucket.size}")
    if bucket.type is not None and code.group_type != tuple(bucket.type):
        found.append(
            f"{where}: type Z4^{code.group_type[0]}Z2^{code.group_type[1]}, "
            f"expected Z4^{bucket.type[0]}Z2^{bucket.type[1]}"
        )
    weights = codeword_weights(code, budgets=budgets)
    nonzero = sorted({int(w) for w in weights[1:]})
    if bucket.weights is not None:
        stray = [w for w in nonzero if w not in bucket.weights]
        if stray:
            found.append(f"{where}: nonzero weights {stray} not allowed")
    if (
        bucket.min_distance is not None
        and nonzero
        and nonzero[0] < bucket.min_distance
    ):
        found.append(
            f"{where}: minimum distance {nonzero[0]}, expected at least "
            f"{bucket.min_distance}"
        )
    return found


def verify_bucket(
    manifest: CorpusManifest,
    bucket: CorpusBucket,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> BucketReport:
    """Checks the codes of one bucket.

    Every code must have the bucket's shape, size, type and weights; the
    number of codes and the number per type must match, and, unless the
    bucket says otherwise, no two codes may be equivalent.
    """
    start = time.time()
    violations: List[str] = []
    try:
        records = manifest.records(bucket)
    except (OSError, ValueError) as error:
        records = []
        violations.append(f"{bucket.file}: {error}")
    if len(records) != bucket.count:
        violations.append(
            f"{bucket.name}: {len(records)} codes listed, expected "
            f"{bucket.count}"
        )
    store = ClassStore(budgets)
    types: Dict[Tuple[int, int], int] = {}
    for index, record in enumerate(records, start=1):
        where = f"{bucket.file}: code {index} (line {record.line})"
        code = record.code
        violations += _code_violations(bucket, code, where, budgets)
        types[code.group_type] = types.get(code.group_type, 0) + 1
        if bucket.inequivalent and not store.add(code):
            violations.append(f"{where}: equivalent to an earlier code")
    for type_count in bucket.type_counts or []:
        found = types.get(tuple(type_count.type), 0)
        if found != type_count.count:
            violations.append(
                f"{bucket.name}: {found} codes of type "
                f"Z4^{type_count.type[0]}Z2^{type_count.type[1]}, expected "
                f"{type_count.count}"
            )
    seconds = time.time() - start
    logger.debug(
        "Bucket `%s`: %d codes, %d violations (%s).",
        bucket.name,
        len(records),
        len(violations),
        get_human_readable_time(seconds),
    )
    return BucketReport(
        name=bucket.name,
        expected=bucket.count,
        found=len(records),
        violations=violations,
        seconds=seconds,
    )


def verify_corpus(
    manifest: Optional[CorpusManifest] = None,
    strict: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
    select: Optional[Callable[[CorpusBucket], bool]] = None,
) -> CorpusReport:
    """Checks every bucket of a manifest.

    Args:
        manifest: The manifest, by default the shipped one.
        strict: Raise on the first violation instead of reporting.
        budgets: Limits for codeword enumeration and canonical forms.
        select: Optional filter of the buckets to check.

    Returns:
        One report per checked bucket.

    Raises:
        CorpusVerificationError: in strict mode, on the first violation.
    """
    start = time.time()
    manifest = manifest if manifest is not None else CorpusManifest.load()
    report = CorpusReport()
    for bucket in manifest.buckets:
        if select is not None and not select(bucket):
            continue
        bucket_report = verify_bucket(manifest, bucket, budgets)
        if strict and not bucket_report.ok:
            raise CorpusVerificationError(bucket_report.violations[0])
        report.buckets.append(bucket_report)
    logger.info(
        "Verified %d buckets, %d codes: %d violations (%s).",
        len(report.buckets),
        sum(bucket.found for bucket in report.buckets),
        len(report.violations),
        get_human_readable_time(time.time() - start),
    )
    return report


def cross_check(
    manifest: CorpusManifest,
    found: Dict[Tuple[int, Tuple[int, int]], List[AdditiveCode]],
    bucket_filter: Callable[[CorpusBucket], bool],
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[str]:
    """Compares the buckets of a fresh classification with the corpus.

    Args:
        manifest: The corpus.
        found: Classes of one ambient by `(size, type)`, as returned by the
            weight-constrained classification.
        bucket_filter: Selects the corpus buckets of that ambient.
        budgets: Limits for canonical forms.

    Returns:
        Differences in class counts and listed codes that match no class.
    """
    problems: List[str] = []
    for bucket in manifest.buckets:
        if not bucket_filter(bucket):
            continue
        if bucket.type is None:
            classes = [
                code
                for (size, _), codes in found.items()
                if size == bucket.size
                for code in codes
            ]
        else:
            classes = found.get((bucket.size, tuple(bucket.type)), [])
        if len(classes) != bucket.count:
            problems.append(
                f"{bucket.name}: {len(classes)} classes found, "
                f"{bucket.count} listed"
            )
            continue
        store = ClassStore(budgets)
        store.update(classes)
        for index, record in enumerate(manifest.records(bucket), start=1):
            if record.code not in store:
                problems.append(
                    f"{bucket.name}: code {index} matches no class found"
                )
    return problems


__all__ = [
    "BucketReport",
    "CorpusReport",
    "cross_check",
    "verify_bucket",
    "verify_corpus",
]
