import pathlib
import sys

# allow running pytest from a fresh checkout without an editable install
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
