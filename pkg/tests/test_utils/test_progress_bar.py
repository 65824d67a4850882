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


"""Tests for the progress bar."""

from qtrig.utils.progress_bar import ProgressBar


def test_progress_bar_counts_identities():
    """The bar advances once per identity, also when it is not drawn."""
    with ProgressBar(3, visible=False) as bar:
        for name in ("a.one", "a.two", "a.three"):
            bar.step(name)
    task = bar.bar.tasks[0]
    assert task.completed == 3
    assert task.total == 3
    assert task.fields["identity"] == "a.three"
