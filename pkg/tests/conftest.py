from __future__ import annotations

import os
import sys
import tempfile
from pathlib import Path

# Keep the Bernoulli cache out of the user's home directory during tests.
os.environ.setdefault("CONGRUENCE_CACHE", tempfile.mkdtemp(prefix="congruence-test-"))
sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import settings  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")
