"""Output directory management for experiment runs."""

import json
import logging
import shutil
import time
from pathlib import Path
from typing import Dict, List, Optional

from .errors import ValidationError

logger = logging.getLogger(__name__)


class RunStore:
    """Writes the files of one experiment run.

    Files are staged in a hidden directory and moved into place only when
    the run completes, so a failing run leaves no partial output behind.
    Existing files are replaced only with ``force``.
    """

    def __init__(self, out_dir: str, force: bool = False):
        self.out_dir = Path(out_dir)
        self.force = force
        self._staging: Optional[Path] = None
        self._written: List[str] = []
        self._started: Optional[float] = None

    def __enter__(self) -> "RunStore":
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self._staging = self.out_dir / ".staging"
        if self._staging.exists():
            shutil.rmtree(self._staging)
        self._staging.mkdir()
        self._started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None:
            self.commit()
        else:
            logger.warning(f"Run failed, discarding {len(self._written)} staged file(s)")
            self.discard()
        return False

    def check_writable(self, names: List[str]) -> None:
        """Refuse to run when results would be overwritten without force."""
        if self.force:
            return
        existing = [n for n in names if (self.out_dir / n).exists()]
        if existing:
            raise ValidationError(
                f"Refusing to overwrite {', '.join(existing)} in {self.out_dir}; use --force"
            )

    def write_text(self, name: str, text: str) -> Path:
        """Stage one text file; LF line endings, UTF-8."""
        if self._staging is None:
            raise RuntimeError("RunStore used outside of a with-block")
        path = self._staging / name
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        self._written.append(name)
        logger.debug(f"Staged {name}")
        return self.out_dir / name

    def commit(self) -> Dict[str, Path]:
        """Move staged files into the output directory."""
        self.check_writable(self._written)
        moved = {}
        elapsed = time.perf_counter() - (self._started or time.perf_counter())
        for name in self._written:
            target = self.out_dir / name
            if target.exists():
                target.unlink()
            shutil.move(str(self._staging / name), str(target))
            moved[name] = target
        with open(self.out_dir / "timing.json", "w", encoding="utf-8", newline="\n") as f:
            json.dump({"files": sorted(self._written), "wall_clock_seconds": round(elapsed, 3)}, f, indent=2)
        shutil.rmtree(self._staging, ignore_errors=True)
        self._staging = None
        return moved

    def discard(self) -> None:
        """Remove everything staged by this run."""
        if self._staging is not None:
            shutil.rmtree(self._staging, ignore_errors=True)
        self._staging = None
        self._written = []
