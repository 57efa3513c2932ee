"""Run every acceptance criterion and print one PASS/FAIL line each."""

import pathlib
import runpy
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))
runpy.run_path(str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"), run_name="__main__")
