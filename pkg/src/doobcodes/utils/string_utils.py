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

from typing import Dict


def get_human_readable_time(seconds: float) -> str:
    """Convert seconds into a human-readable string."""
    prefix = "-" if seconds < 0 else ""
    seconds = abs(seconds)
    int_seconds = int(seconds)
    days, int_seconds = divmod(int_seconds, 86400)
    hours, int_seconds = divmod(int_seconds, 3600)
    minutes, int_seconds = divmod(int_seconds, 60)
    if days > 0:
        time_string = f"{days}d{hours}h{minutes}m{int_seconds}s"
    elif hours > 0:
        time_string = f"{hours}h{minutes}m{int_seconds}s"
    elif minutes > 0:
        time_string = f"{minutes}m{int_seconds}s"
    else:
        time_string = f"{seconds:.3f}s"

    return prefix + time_string


def get_human_readable_count(count: int) -> str:
    """Format a large count with thousands separators, powers of two and four
    spelled out when exact (`4096 (4^6)`)."""
    text = f"{count:,}"
    if count > 1 and count & (count - 1) == 0:
        exponent = count.bit_length() - 1
        if exponent % 2 == 0:
            text += f" (4^{exponent // 2})"
        else:
            text += f" (2^{exponent})"
    return text


def format_distribution(counts: Dict[int, int]) -> str:
    """Renders a sparse weight distribution as `w:count` pairs separated by
    single spaces, in increasing weight order."""
    return " ".join(f"{w}:{c}" for w, c in sorted(counts.items()) if c)


def parse_distribution(text: str) -> Dict[int, int]:
    """Parses `w:count` pairs separated by commas or whitespace.

    Args:
        text: e.g. `0:1,6:36,8:27`.

    Returns:
        Mapping from weight to count; repeated weights are summed.

    Raises:
        ValueError: on a malformed pair or a negative number.
    """
    result: Dict[int, int] = {}
    for item in text.replace(",", " ").split():
        weight, sep, count = item.partition(":")
        if not sep:
            raise ValueError(f"Expected `weight:count`, got `{item}`.")
        w, c = int(weight), int(count)
        if w < 0 or c < 0:
            raise ValueError(f"Negative entry in `{item}`.")
        result[w] = result.get(w, 0) + c
    return result
