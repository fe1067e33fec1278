import os
import sys

# Under ctest, import the module from the build tree even if an editable install is present.
_pkg = os.environ.get("KBRAID_PKG_DIR")
if _pkg:
    sys.meta_path[:] = [f for f in sys.meta_path if "_editable_skbc_kbraid" not in type(f).__module__]
    sys.path.insert(0, _pkg)
