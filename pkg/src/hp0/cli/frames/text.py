"""Plain text frames: a "k n" header line, then k lines of n integers."""

from hp0.matroid import FrameError


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for col, token in enumerate(line.split(), 1):
        try:
            out.append(int(token))
        except ValueError:
            raise FrameError(f"line {lineno}, field {col}: {token!r} is not an integer") from None
    return out


def parse(content: str) -> tuple[int, int, list[list[int]]]:
    numbered = enumerate(content.splitlines(), 1)
    lines = [(i, line) for i, line in numbered if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise FrameError("empty frame file")
    lineno, header = lines[0]
    dims = _ints(header, lineno)
    if len(dims) != 2:
        raise FrameError(f"line {lineno}: header must be 'k n', got {len(dims)} fields")
    k, n = dims

    body = lines[1:]
    if len(body) != k:
        raise FrameError(f"header says k={k} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        row = _ints(line, lineno)
        if len(row) != n:
            raise FrameError(f"line {lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return k, n, rows
