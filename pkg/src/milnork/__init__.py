# When you try `import milnork` this script is executed. The namespaces
# that are loaded here and the way they are loaded will be tacked on to
# the primary call.

# >>> import milnork
# >>> milnork.milnork.fgab.__file__
# '.../src/milnork/milnork/fgab.py'

from . import milnork
from . import tools

# make sure the default plugins are loaded
from .plugins import (
    suite_plugins,
    report_plugins,
)
