"""Binary-classification evaluation: confusion matrix and accuracy."""

from dataclasses import dataclass

from .errors import EmptyInput, InternalError, LengthMismatch


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self):
        return self.tp + self.tn + self.fp + self.fn


def confusion(y_true, y_pred) -> ConfusionMatrix:
    """Tally binary predictions against ground truth."""
    if len(y_true) != len(y_pred):
        raise LengthMismatch(
            f"{len(y_true)} true labels vs {len(y_pred)} predictions")
    if len(y_true) == 0:
        raise EmptyInput("no label pairs to evaluate")
    tp = tn = fp = fn = 0
    for t, p in zip(y_true, y_pred):
        if t not in (0, 1) or p not in (0, 1):
            raise InternalError(f"non-binary label pair ({t!r}, {p!r})")
        if t == 1:
            if p == 1:
                tp += 1
            else:
                fn += 1
        else:
            if p == 1:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, tn=tn, fp=fp, fn=fn)


def accuracy(y_true, y_pred) -> float:
    """Percentage of matching labels on the 0..100 scale."""
    cm = confusion(y_true, y_pred)
    return 100.0 * (cm.tp + cm.tn) / cm.total


def format_confusion(cm: ConfusionMatrix) -> str:
    """Labeled 2x2 table plus accuracy with two decimals."""
    acc = 100.0 * (cm.tp + cm.tn) / cm.total
    width = max(len(str(v)) for v in (cm.tp, cm.tn, cm.fp, cm.fn))
    width = max(width, len("pred 0"))
    rows = [
        f"{'':8} {'pred 0':>{width}} {'pred 1':>{width}}",
        f"{'true 0':8} {cm.tn:>{width}} {cm.fp:>{width}}",
        f"{'true 1':8} {cm.fn:>{width}} {cm.tp:>{width}}",
        f"accuracy: {acc:.2f}",
    ]
    return "\n".join(rows)
