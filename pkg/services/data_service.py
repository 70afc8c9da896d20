import csv
import io
import json
import logging
import threading

from common.data_manager import DataManager
from common.errors import LabelingParseError
from common.settings import get_settings
from modules.graph_core.models.labeling import EdgeLabeling
from utils.path_utils import get_data_path

logger = logging.getLogger(__name__)

SIDECAR_FIELDS = ("case_tag", "claimed_gamma")


class DataService:
    """
    Service class for every file the lab reads or writes: labeling
    certificates, gamma and solve reports, sweep tables.
    """

    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        """Singleton pattern to ensure only one instance exists"""
        with cls._lock:
            if cls._instance is None:
                cls._instance = super(DataService, cls).__new__(cls)
                cls._instance._initialized = False
            return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._initialized = True
        self._write_lock = threading.Lock()
        self.manager = DataManager()

    def default_path(self, kind, params, suffix="json"):
        """data/<kind>/K_m_n_p.<suffix> under the configured data directory"""
        m, n, p = params.sizes
        return get_data_path(f"{kind}/K_{m}_{n}_{p}.{suffix}", get_settings().data_dir)

    # labelings

    def save_labeling(self, labeling, path, case_tag=None, claimed_gamma=None):
        """Write a labeling certificate, with the optional sidecar fields."""
        data = labeling.to_dict()
        if case_tag is not None:
            data["case_tag"] = str(case_tag)
        if claimed_gamma is not None:
            data["claimed_gamma"] = int(claimed_gamma)
        with self._write_lock:
            saved = self.manager.save_json(path, data)
        logger.info("[STORE] %s certificate (weight %d) written to %s", labeling.params, labeling.weight, saved)
        return saved

    def load_labeling(self, path):
        """Read a labeling file; returns (labeling, sidecar dict)."""
        try:
            data = self.manager.load_json(path)
        except json.JSONDecodeError as e:
            raise LabelingParseError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from e
        except OSError as e:
            raise LabelingParseError(f"{path}: {e.strerror or e}") from e
        labeling = EdgeLabeling.from_dict(data)
        sidecar = {key: data[key] for key in SIDECAR_FIELDS if key in data}
        return labeling, sidecar

    # reports and tables

    def save_report(self, data, path):
        with self._write_lock:
            saved = self.manager.save_json(path, data)
        logger.info("[STORE] report written to %s", saved)
        return saved

    def save_table(self, path, header, rows, comment=None):
        """Write a CSV table, optionally preceded by a '# ...' comment line."""
        buffer = io.StringIO()
        if comment:
            buffer.write(f"# {comment}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        with self._write_lock:
            saved = self.manager.save_text(path, buffer.getvalue())
        logger.info("[STORE] %d rows written to %s", len(rows), saved)
        return saved
