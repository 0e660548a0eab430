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
"""
The ``corpus`` module holds the shipped tables of codes, the plain-text
format they are written in and the manifest describing them: diameter-9
two-weight codes by ambient, size and group type, the six- and seven-
dimensional additive GF(4) codes of minimum distance 3 with their lifts to
`D(6, 0+0)` and the codes named in the tables of the classifications.
"""
from doobcodes.corpus.code_format import (
    CodeRecord,
    parse_code,
    parse_codes,
    parse_records,
    read_codes,
    read_records,
    render_code,
    render_codes,
    write_codes,
)
from doobcodes.corpus.manifest import (
    CorpusBucket,
    CorpusManifest,
    TypeCount,
    data_path,
)
from doobcodes.corpus.verification import (
    BucketReport,
    CorpusReport,
    cross_check,
    verify_bucket,
    verify_corpus,
)

__all__ = [
    "BucketReport",
    "CodeRecord",
    "CorpusBucket",
    "CorpusManifest",
    "CorpusReport",
    "TypeCount",
    "cross_check",
    "data_path",
    "parse_code",
    "parse_codes",
    "parse_records",
    "read_codes",
    "read_records",
    "render_code",
    "render_codes",
    "verify_bucket",
    "verify_corpus",
    "write_codes",
]
