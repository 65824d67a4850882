# Copyright 2024 The qtrig developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""This is the top-most `__init__.py` file of the qtrig package."""

from rich import print  # pylint: disable=redefined-builtin

from ._version import __version__
from .utils.settings import *


def version():
    r"""Version number of qtrig.

    Returns:
      str: package version number
    """
    return __version__


def about():
    """qtrig information.

    Prints the installed version numbers for qtrig and its dependencies,
    and some system info. Please include this information in bug reports.

    **Example:**

    .. code-block:: pycon

        >>> qtrig.about()
        qtrig: q-exponentials, q-trigonometry and Jackson calculus with error control.

        Python version:            3.11.4
        Platform info:             Linux-6.2.0-x86_64-with-glibc2.35
        Installation path:         /home/qtrig/
        qtrig version:             0.1.0
        Numpy version:             1.26.4
        Numba version:             0.59.1
        Scipy version:             1.12.0
        Pandas version:            2.2.1
        Click version:             8.2.1
    """
    # pylint: disable=import-outside-toplevel,consider-using-f-string
    import os
    import platform
    import sys
    from importlib.metadata import version as package_version

    import numba
    import numpy
    import pandas
    import scipy

    print("\nqtrig: q-exponentials, q-trigonometry and Jackson calculus with error control.\n")

    print("Python version:            {}.{}.{}".format(*sys.version_info[0:3]))
    print("Platform info:             {}".format(platform.platform()))
    print("Installation path:         {}".format(os.path.dirname(__file__)))
    print("qtrig version:             {}".format(__version__))
    print("Numpy version:             {}".format(numpy.__version__))
    print("Numba version:             {}".format(numba.__version__))
    print("Scipy version:             {}".format(scipy.__version__))
    print("Pandas version:            {}".format(pandas.__version__))
    print("Click version:             {}".format(package_version("click")))
