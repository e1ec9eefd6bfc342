import pytest

from zinbiel_lab.catalog import build_family

NF_DIMS = [(6, 4), (6, 5), (7, 5)]
ALPHAS = ["0", "1", "-2", "3/7"]
SMALL_PARAMS = ["0", "1", "-1", "2/3"]


def catalog_cases() -> list:
    """(case id, family id, build kwargs) for every catalog instance under test."""
    cases = []
    cases += [(f"NullFiliformAlg-{n}", "NullFiliformAlg", {"n": n}) for n in range(3, 11)]
    cases += [(f"NgFiliformAlg-{n}", "NgFiliformAlg", {"n": n}) for n in range(5, 10)]
    cases += [(f"NullFiliformSuper-{d}", "NullFiliformSuper", {"dim": d}) for d in range(3, 12)]
    for n, m in NF_DIMS:
        cases.append((f"NF1-{n}-{m}", "NF1", {"n": n, "m": m}))
        cases.append((f"NF3-{n}-{m}", "NF3", {"n": n, "m": m}))
        cases += [(f"NF2-{n}-{m}-{a}", "NF2", {"n": n, "m": m, "alpha": a}) for a in ALPHAS]
    cases += [(f"NF4-{n}-{m}", "NF4", {"n": n, "m": m}) for n, m in [(6, 4), (6, 5)]]
    cases += [(f"NF5-{n}-{m}", "NF5", {"n": n, "m": m}) for n, m in [(6, 5), (7, 6)]]
    cases += [(f"A1-{n}", "A1", {"n": n}) for n in (5, 6, 7)]
    cases.append(("A2", "A2", {}))
    cases += [(family, family, {}) for family in ("Z21", "Z31", "Z32", "Z33", "Z35")]
    cases += [(family, family, {}) for family in ("z32", "z33", "z34", "z35", "z36", "z38", "z39")]
    cases += [(f"Z34-{b}", "Z34", {"beta": b}) for b in SMALL_PARAMS]
    cases += [(f"z31-{a}", "z31", {"alpha": a}) for a in SMALL_PARAMS]
    cases += [(f"z37-{a}", "z37", {"alpha": a}) for a in SMALL_PARAMS]
    return cases


CATALOG_CASES = catalog_cases()
THREE_DIM_CASES = [case for case in CATALOG_CASES if case[1][0] in "Zz" and case[1] != "Z21"]
FILIFORM_CASES = [case for case in CATALOG_CASES if case[1].startswith(("NF", "A"))]


@pytest.fixture(params=CATALOG_CASES, ids=[case[0] for case in CATALOG_CASES])
def catalog_algebra(request):
    _, family, kwargs = request.param
    return build_family(family, **kwargs)


@pytest.fixture(params=THREE_DIM_CASES, ids=[case[0] for case in THREE_DIM_CASES])
def small_algebra(request):
    _, family, kwargs = request.param
    return build_family(family, **kwargs)


@pytest.fixture(params=FILIFORM_CASES, ids=[case[0] for case in FILIFORM_CASES])
def filiform_algebra(request):
    _, family, kwargs = request.param
    return build_family(family, **kwargs)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep Config.load/save away from the real user config directory."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    monkeypatch.setenv("APPDATA", str(tmp_path / "config"))
    return tmp_path / "config" / "zinbiel-lab" / "config.json"
