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


"""A module containing the progress bar displayed while identities are being checked."""

from rich.console import Console
from rich.progress import BarColumn, Progress, TextColumn, TimeRemainingColumn

from qtrig.utils.settings import settings


# pylint: disable=disallowed-name
class ProgressBar:
    r"""A spiffy loading bar to display the progress of an identity check.

    The bar is drawn on stderr so that the data written to stdout stays parseable.

    Args:
        total: the number of identities that will be checked
        visible: whether to draw the bar at all (defaults to ``settings.PROGRESSBAR``)
    """

    def __init__(self, total: int, visible: bool = None):
        visible = settings.PROGRESSBAR if visible is None else visible
        self.bar = Progress(
            TextColumn("Identity {task.completed}/{task.total}"),
            BarColumn(),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            TextColumn("{task.fields[identity]} | ⏳ "),
            TimeRemainingColumn(),
            console=Console(stderr=True),
            disable=not visible,
        )
        self.taskID = self.bar.add_task(
            description="Checking...",
            total=total,
            identity="",
            refresh=True,
        )

    def step(self, identity: str):
        """Advance the bar by one identity and display its name."""
        self.bar.update(self.taskID, advance=1, refresh=True, identity=identity)

    def __enter__(self):
        self.bar.__enter__()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        return self.bar.__exit__(exc_type, exc_val, exc_tb)
