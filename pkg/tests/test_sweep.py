import subprocess
import sys
from pathlib import Path

from abdarg.sweep import SweepConfig, run_sweep

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_small_sweep_agrees():
    results = run_sweep(SweepConfig(seed=3, aafs=20, programs=20, alps=5))
    assert [r.name for r in results] == ["dialogues", "instantiation", "abduction"]
    assert all(r.ok and r.cases > 0 for r in results)


def test_sweep_script_selects_checks():
    proc = subprocess.run([sys.executable, str(SCRIPTS / "property_sweep.py"), "--aafs", "10",
                           "--only", "dialogues"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dialogues" in proc.stdout and "abduction" not in proc.stdout.split("\n", 1)[1]


def test_reproduce_script_runs():
    proc = subprocess.run([sys.executable, str(SCRIPTS / "reproduce_examples.py")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "skeptical  G1, G3" in proc.stdout
    assert "P + s  ({q, r, s}, {p})" in proc.stdout
