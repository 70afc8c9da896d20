import json
import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)


class DataManager:
    """Reads and writes JSON and text files with a temp-file-then-rename save"""

    def save_text(self, path, text):
        """Write text atomically; the previous file survives a failed write."""
        path = Path(path)
        os.makedirs(path.parent, exist_ok=True)

        temp_file = path.with_name(path.name + ".tmp")
        try:
            with open(temp_file, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
                f.flush()
                os.fsync(f.fileno())
            os.replace(temp_file, path)
        except OSError:
            if temp_file.exists():
                temp_file.unlink()
            raise
        logger.debug("[SAVE] wrote %d bytes to %s", len(text), path)
        return path

    def save_json(self, path, data):
        text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
        return self.save_text(path, text)

    def load_json(self, path):
        """Load a JSON document; raises OSError or json.JSONDecodeError"""
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
