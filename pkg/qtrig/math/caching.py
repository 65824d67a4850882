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


"""This module contains the logic for caching functions of an integer and of q."""

from functools import lru_cache, wraps

__all__ = ["q_cache"]


def q_cache(fn):
    """Decorator function to cache functions with an int and a deformation parameter as
    arguments, that is, functions with signature ``func(n: int, q: QParam)``.

    The deformation parameter is not necessarily hashable in a useful way (a ``QParam`` and
    the float it wraps should hit the same entry), so it is converted into a float, which is
    used together with ``n`` as the key of ``functools.lru_cache``. The wrapped function
    receives the float. ``lru_cache`` keeps the table consistent under concurrent readers and
    concurrent first writers (a value may be computed twice, never stored inconsistently).
    Cached values must be treated as read-only."""

    @lru_cache(maxsize=256)
    def cached_wrapper(n, q):
        return fn(n, q)

    @wraps(fn)
    def wrapper(n, q):
        return cached_wrapper(int(n), float(q))

    # copy lru_cache attributes over too
    wrapper.cache_info = cached_wrapper.cache_info
    wrapper.cache_clear = cached_wrapper.cache_clear

    return wrapper
