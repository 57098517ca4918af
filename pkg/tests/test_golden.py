"""Every operation's documented examples, pinned byte for byte.

Regenerate with `pytest tests/test_golden.py --regen-golden` after an
intentional output change; the builders re-assert their hand values on
regeneration, so the files stay tied to the arithmetic.
"""

import pytest

from golden_cases import CASES
from pathforms.serialize import dumps


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, golden_check):
    golden_check(name, dumps(CASES[name]()))
