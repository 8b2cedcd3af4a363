import json

import pytest

from arbors.config import ALL_CHECKS, SweepConfig


def test_defaults():
    c = SweepConfig()
    assert c.max_size == 8 and c.series_order == 10 and c.checks == ALL_CHECKS
    assert c.to_json()["checks"] == list(ALL_CHECKS)


def test_file_then_overrides(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"max_size": 5, "jobs": 2}))
    c = SweepConfig.load(p, max_size=6, jobs=None)
    assert c.max_size == 6 and c.jobs == 2


@pytest.mark.parametrize("bad", [{"max_size": 0}, {"format": "xml"}, {"checks": ["nope"]}, {"colour": 1}])
def test_rejects_bad_values(tmp_path, bad):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(bad))
    with pytest.raises(ValueError):
        SweepConfig.load(p)


def test_rejects_non_object(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text("[1, 2]")
    with pytest.raises(ValueError):
        SweepConfig.load(p)
