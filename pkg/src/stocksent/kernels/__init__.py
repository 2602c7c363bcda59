"""Numeric kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
numpy fallback takes over. Setting STOCKSENT_PURE_KERNELS=1 forces the
fallback, which is how the equivalence tests and the benchmark pin each
side.
"""

import os

if os.environ.get("STOCKSENT_PURE_KERNELS") == "1":
    from . import pure as _impl
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl
        BACKEND = "pure"

lstm_seq_forward = _impl.lstm_seq_forward
lstm_seq_backward = _impl.lstm_seq_backward
rf_split_counts = _impl.rf_split_counts

__all__ = ["BACKEND", "lstm_seq_forward", "lstm_seq_backward",
           "rf_split_counts"]
