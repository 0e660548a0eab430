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

import threading
from typing import Dict, Iterable, List, Optional

from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import SeedOrder
from doobcodes.equivalence.canonical import (
    InvariantKey,
    canonical_form,
    invariant_key,
)


class _Entry:
    __slots__ = ("code", "certificate")

    def __init__(self, code: AdditiveCode) -> None:
        self.code = code
        self.certificate: Optional[bytes] = None


class ClassStore:
    """Equivalence classes of codes, one stored representative each.

    Codes are bucketed by their invariant key; canonical forms are only
    computed when a bucket receives a second code. Inserts are serialized by
    a lock and idempotent.
    """

    def __init__(self, budgets: Budgets = DEFAULT_BUDGETS) -> None:
        self.budgets = budgets
        self._buckets: Dict[InvariantKey, List[_Entry]] = {}
        self._discovery: List[_Entry] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._discovery)

    def _certificate(self, entry: _Entry) -> bytes:
        if entry.certificate is None:
            entry.certificate = canonical_form(
                entry.code, self.budgets
            ).canonical_bytes
        return entry.certificate

    def would_collide(self, key: InvariantKey) -> bool:
        """Whether a code with this key would need a canonical form."""
        return key in self._buckets

    def find(
        self, code: AdditiveCode, key: Optional[InvariantKey] = None
    ) -> Optional[AdditiveCode]:
        """The stored representative equivalent to a code, if any."""
        key = key if key is not None else invariant_key(code, self.budgets)
        bucket = self._buckets.get(key)
        if not bucket:
            return None
        certificate = canonical_form(code, self.budgets).canonical_bytes
        for entry in bucket:
            if entry.code == code or self._certificate(entry) == certificate:
                return entry.code
        return None

    def __contains__(self, code: object) -> bool:
        return isinstance(code, AdditiveCode) and self.find(code) is not None

    def add(
        self, code: AdditiveCode, key: Optional[InvariantKey] = None
    ) -> bool:
        """Stores a code unless an equivalent one is stored.

        Args:
            code: The code.
            key: Its invariant key, if already known.

        Returns:
            True if the code started a new class.
        """
        key = key if key is not None else invariant_key(code, self.budgets)
        with self._lock:
            bucket = self._buckets.setdefault(key, [])
            entry = _Entry(code)
            if bucket:
                if any(other.code == code for other in bucket):
                    return False
                certificate = self._certificate(entry)
                if any(
                    self._certificate(other) == certificate
                    for other in bucket
                ):
                    return False
            bucket.append(entry)
            self._discovery.append(entry)
            return True

    def update(self, codes: Iterable[AdditiveCode]) -> int:
        """Adds codes in order; returns the number of new classes."""
        return sum(self.add(code) for code in codes)

    def classes(
        self, order: SeedOrder = SeedOrder.CANONICAL
    ) -> List[AdditiveCode]:
        """Stored representatives.

        In canonical order the classes are sorted by invariant key and,
        inside a bucket, by canonical bytes, so the order does not depend
        on the order of insertion.
        """
        if order == SeedOrder.DISCOVERY:
            return [entry.code for entry in self._discovery]
        result = []
        for key in sorted(self._buckets):
            bucket = self._buckets[key]
            if len(bucket) > 1:
                bucket = sorted(bucket, key=self._certificate)
            result += [entry.code for entry in bucket]
        return result
