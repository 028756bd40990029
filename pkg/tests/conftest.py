import pytest

from splicecap import (
    bundled_external_path,
    bundled_table_path,
    build_map,
    gen_pretzel,
    gen_rational,
    gen_torus,
    ingest_external,
    ingest_table,
    parse_code,
)


@pytest.fixture(scope="session")
def table():
    return ingest_table(bundled_table_path())


@pytest.fixture(scope="session")
def table_maps(table):
    return {e.name: e.map for e in table}


@pytest.fixture(scope="session")
def external_rows():
    return ingest_external(bundled_external_path())


@pytest.fixture(scope="session")
def trefoil():
    return build_map(parse_code("1+ 2+ 3+ 1+ 2+ 3+"))


@pytest.fixture(scope="session")
def kink():
    return build_map(parse_code("1+ 1+"))


@pytest.fixture(scope="session")
def double_kink():
    return build_map(parse_code("1+ 1+ 2+ 2+"))


def family_members(max_crossings):
    """All torus/rational/pretzel members up to a crossing budget."""
    out = []
    for l in range(2, (max_crossings + 1) // 2 + 1):
        if 2 * l - 1 <= max_crossings:
            out.append((f"torus({l})", gen_torus(l)))
    for m in range(1, max_crossings // 2 + 1):
        for n in range(2, max_crossings // 2 + 2):
            if 2 * m + 2 * n - 1 <= max_crossings:
                out.append((f"rational({m},{n})", gen_rational(m, n)))
    for p in range(1, max_crossings // 2 + 1):
        for q in range(1, max_crossings // 2 + 1):
            for r in range(q, max_crossings // 2 + 1):
                # (q, r) swap gives the mirror-symmetric closure; skip echoes
                if 2 * (p + q + r) - 2 <= max_crossings:
                    out.append((f"pretzel({p},{q},{r})", gen_pretzel(p, q, r)))
    return out
