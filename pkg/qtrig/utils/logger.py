# Copyright 2010 Pallets

# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:

# 1. Redistributions of source code must retain the above copyright notice,
#    this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
# 3. Neither the name of the copyright holder nor the names of its contributors
#    may be used to endorse or promote products derived from this software
#    without specific prior written permission.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

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


"""
Module loggers for qtrig.

Every log record goes to standard error, so that the data written by the command line on
standard output stays machine readable. A logger is configured only if the user configured
nothing, as the Flask web framework does
(https://github.com/pallets/flask/blob/master/src/flask/logging.py).
"""

import logging
import sys

__all__ = ["create_logger", "default_handler", "LOG_FORMAT"]

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class StderrHandler(logging.StreamHandler):
    r"""A stream handler writing to the ``sys.stderr`` of the moment it emits."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value):
        pass


default_handler = StderrHandler()
default_handler.setFormatter(logging.Formatter(LOG_FORMAT))


def create_logger(name: str, level: int = logging.INFO) -> logging.Logger:
    r"""Returns the logger of a qtrig module, attaching :data:`default_handler` to it if the
    logging configuration was left untouched.

    The logger counts as untouched if its own level is unset, it inherits the WARNING level
    and neither it nor an ancestor it propagates to has a handler.

    Args:
        name: the name of the module
        level: the level given to an untouched logger

    Returns:
        logging.Logger: the logger
    """
    logger = logging.getLogger(name)
    untouched = (
        logger.level == logging.NOTSET
        and logger.getEffectiveLevel() == logging.WARNING
        and not logger.hasHandlers()
    )
    if untouched:
        logger.setLevel(level)
        logger.addHandler(default_handler)
    return logger
