import importlib.util
from pathlib import Path


def test_benchmark_smoke(capsys):
    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(["--n", "60", "--m", "200", "--repeat", "1"])
    out = capsys.readouterr().out
    assert "enumerate" in out and "greedy" in out
