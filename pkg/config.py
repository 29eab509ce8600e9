import os

basedir = os.path.abspath(os.path.dirname(__file__))


class Config:
    MPS_TOLERANCE = float(os.environ.get("MPS_TOLERANCE") or 1e-9)
    MPS_PIVOT_TOLERANCE = float(os.environ.get("MPS_PIVOT_TOLERANCE") or 1e-9)
    MPS_SEARCH_MAX_ORDER = int(os.environ.get("MPS_SEARCH_MAX_ORDER") or 8)
    MPS_CANON_MAX_ORDER = int(os.environ.get("MPS_CANON_MAX_ORDER") or 8)
    MPS_SEARCH_THREADS = int(os.environ.get("MPS_SEARCH_THREADS") or 1)
    MPS_OUTPUT_FORMAT = os.environ.get("MPS_OUTPUT_FORMAT") or "json"
    LOG_LEVEL = os.environ.get("LOG_LEVEL") or "WARNING"
    OUTPUT_FOLDER = os.environ.get("MPS_OUTPUT_FOLDER") or os.path.join(basedir, "output")
