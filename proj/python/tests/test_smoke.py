import json
import pathlib

import numpy as np
import pytest

import sliceloc

REPO = pathlib.Path(__file__).resolve().parents[2]


def test_step_rules():
    assert sliceloc.step(10, 5, 3, sliceloc.DOWN) == (4, 1.0, False, False)
    assert sliceloc.step(10, 5, 4, sliceloc.DOWN) == (5, 0.5, True, False)
    assert sliceloc.step(10, 5, 0, sliceloc.UP) == (0, -1.0, False, True)
    assert sliceloc.step(10, 5, 7, sliceloc.DOWN)[1] == -1.0


def test_value_iteration_hand_values():
    q = sliceloc.value_iteration(5, 2)
    assert q.shape == (5, 2)
    assert q[1, sliceloc.DOWN] == pytest.approx(0.5, abs=1e-12)
    assert q[0, sliceloc.DOWN] == pytest.approx(1.45, abs=1e-12)


def test_metrics_summary():
    m = sliceloc.metrics([0.0, 2.0, 4.0, 14.0])
    assert m["mean"] == 5.0
    assert m["median"] == 3.0
    assert m["count_gt_10mm"] == 1
    assert m["summary"].startswith("Mean,Std,Median,Max,Error > 10mm\n5.0000,5.3852")


def test_window_and_mip():
    pixels, target = sliceloc.synthesize(1, seed=3)[0]
    assert pixels.shape == (300, 64)
    assert 0 <= target < 300
    window = sliceloc.extract_state(pixels, 0, rows=100, cols=64)
    assert window.shape == (100, 64)
    assert np.all(window[50] == 1.0)
    assert np.all(window[:50] == 0.0)

    volume = np.full((4, 3, 2), -1000.0, dtype=np.float32)
    volume[1, 2, 1] = 1500.0
    image = sliceloc.mip(volume, z_spacing_mm=1.0)
    assert image.shape == (4, 2)
    assert image[1, 1] == 1.0 and image.sum() == 1.0


def test_contract_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        sliceloc.extract_state(np.zeros((5, 2), dtype=np.float32), 9, rows=3, cols=2)


def test_train_save_load_localize(tmp_path):
    data = tmp_path / "line"
    cfg = json.loads((REPO / "configs" / "line.json").read_text())
    cfg["dataset"] = str(data)
    cfg_path = tmp_path / "line.json"
    cfg_path.write_text(json.dumps(cfg))
    images = sliceloc.line_dataset(21)
    assert sliceloc.write_dataset(images, data) == 21

    agent, log = sliceloc.train(cfg_path, seed=1, episodes=300)
    assert len(log) == 300
    assert agent.window == (7, 2)
    agent.save(tmp_path / "ck")
    loaded = sliceloc.Agent.load(tmp_path / "ck")
    assert loaded.gradient_steps == agent.gradient_steps

    pixels, target = images[10]
    assert loaded.q_values(pixels, 3) == agent.q_values(pixels, 3)
    trace = loaded.localize(pixels, start=0)
    assert len(trace["steps"]) <= 2 * 21
    assert trace["termination"] in ("oscillation", "step_cap")
    assert abs(trace["predicted_row"] - target) <= 2

