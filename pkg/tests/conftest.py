import random

import pytest

from hp0.matroid import GaleFrame

U12 = [[1, 1]]
U13 = [[1, 1, 1]]
TRI = [[1, 0, 1], [0, 1, 1]]
PATH = [[1, 1, 0], [0, 1, 1]]
LOOPED = [[1, 1, 0]]

CORPUS = {
    "u12": U12,
    "u13": U13,
    "tri": TRI,
    "path": PATH,
    "square": [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]],
    "k4_minus": [[1, 0, 1, 1], [0, 1, -1, 0]],
}


def graph_frame(vertices: int, edges: int, rng: random.Random) -> GaleFrame:
    """Incidence matrix of a random connected directed graph with its last row dropped: always unimodular."""
    pairs = [(rng.randrange(v), v) for v in range(1, vertices)]
    while len(pairs) < edges:
        u, v = rng.sample(range(vertices), 2)
        pairs.append((u, v))
    rng.shuffle(pairs)
    rows = [[0] * len(pairs) for _ in range(vertices)]
    for j, (u, v) in enumerate(pairs):
        rows[u][j] = 1
        rows[v][j] = -1
    return GaleFrame.from_rows(rows[:-1])


@pytest.fixture(params=sorted(CORPUS))
def corpus_frame(request) -> GaleFrame:
    return GaleFrame.from_rows(CORPUS[request.param])


@pytest.fixture
def tri() -> GaleFrame:
    return GaleFrame.from_rows(TRI)


@pytest.fixture
def u12() -> GaleFrame:
    return GaleFrame.from_rows(U12)


@pytest.fixture
def u13() -> GaleFrame:
    return GaleFrame.from_rows(U13)


@pytest.fixture
def looped() -> GaleFrame:
    return GaleFrame.from_rows(LOOPED)


@pytest.fixture
def random_frames() -> list[GaleFrame]:
    rng = random.Random(7)
    return [graph_frame(rng.randint(2, 4), rng.randint(3, 5), rng) for _ in range(6)]


@pytest.fixture
def frames(corpus_frame, random_frames) -> list[GaleFrame]:
    return [corpus_frame, *random_frames]
