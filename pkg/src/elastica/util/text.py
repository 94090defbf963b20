import os
import re

import unidecode


def slugify(text: str) -> str:
    """
    Lower case ascii slug of `text`, safe to use as a directory name.
    """
    text = unidecode.unidecode(text).lower().strip()
    text = re.sub(r"[^\w\s.-]", "", text)
    text = re.sub(r"[\s.-]+", "-", text)
    return re.sub(r"^-+|-+$", "", text) or "run"


def run_name(config_path: str) -> str:
    """Name of the run directory for a run file, e.g. `Loss of convexity.txt` → `loss-of-convexity`"""
    stem, _ = os.path.splitext(os.path.basename(config_path))
    return slugify(stem)
