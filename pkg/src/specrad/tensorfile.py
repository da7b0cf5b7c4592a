"""Text format for tensors.

Grammar: '#' lines are comments, blanks are skipped; the first significant
line is "tensor <m> <n>"; every following line holds m whitespace-separated
1-based indices and one nonnegative decimal value.  Zero-valued lines are
accepted and dropped; duplicates and negative values are errors.
"""

from .errors import TensorFormatError
from .tensor import NonnegativeTensor


def parse_tensor(text: str) -> NonnegativeTensor:
    order = dim = None
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 3 or tokens[0] != "tensor":
                raise TensorFormatError(
                    f"expected header 'tensor <m> <n>', got {line!r}", line=lineno
                )
            try:
                order, dim = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise TensorFormatError(f"non-integer header fields in {line!r}", line=lineno)
            if order < 2 or dim < 1:
                raise TensorFormatError(
                    f"header requires m >= 2 and n >= 1, got m={order} n={dim}", line=lineno
                )
            continue
        if len(tokens) != order + 1:
            raise TensorFormatError(
                f"expected {order} indices and a value, got {len(tokens)} fields", line=lineno
            )
        try:
            key = tuple(int(t) for t in tokens[:-1])
        except ValueError:
            raise TensorFormatError(f"non-integer index in {line!r}", line=lineno)
        for i in key:
            if not (1 <= i <= dim):
                raise TensorFormatError(f"index {i} out of range 1..{dim}", line=lineno)
        try:
            value = float(tokens[-1])
        except ValueError:
            raise TensorFormatError(f"bad value {tokens[-1]!r}", line=lineno)
        if value < 0:
            raise TensorFormatError(f"negative value {value}", line=lineno)
        if key in seen:
            raise TensorFormatError(f"duplicate index tuple {key}", line=lineno)
        seen.add(key)
        entries.append((key, value))
    if order is None:
        raise TensorFormatError("missing 'tensor <m> <n>' header")
    return NonnegativeTensor(order, dim, entries)


def render_tensor(T: NonnegativeTensor) -> str:
    lines = [f"tensor {T.order} {T.dim}"]
    for key in sorted(T.entries):
        indices = " ".join(str(i) for i in key)
        lines.append(f"{indices} {T.entries[key]!r}")
    return "\n".join(lines) + "\n"


def load_tensor(path) -> NonnegativeTensor:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tensor(fh.read())
