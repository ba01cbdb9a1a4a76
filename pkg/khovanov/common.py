#!/usr/bin/env python3
#
# Copyright 2026 The Chronological Khovanov Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import queue
import sys
import threading
import yaml

DEBUG = os.environ.get("KH_DEBUG", "") not in ("", "0")
PRINT_LOCK = threading.Lock()

CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "suites.yml")


class KhovanovException(Exception):
    """
    Raised whenever something goes wrong with the input and we should exit with an error.
    """

    pass


class ConsistencyException(KhovanovException):
    """
    Raised when an internal invariant (d² = 0, the cocycle condition, a face relation)
    does not hold. These always point at a bug, never at bad input.
    """

    def __init__(self, message, dump=None):
        super(ConsistencyException, self).__init__(message)
        self.dump = dump


def eprint(*args, **kwargs):
    """
    Print to stderr and flush (just in case).
    """
    with PRINT_LOCK:
        print(*args, flush=True, file=sys.stderr, **kwargs)


def debug(*args, **kwargs):
    if DEBUG:
        eprint(*args, **kwargs)


def read_config_file(path=None):
    path = path or CONFIG_PATH
    try:
        with open(path, "rb") as fd:
            content = fd.read().decode("utf-8")
        config = yaml.safe_load(content) or {}
    except (IOError, yaml.YAMLError) as e:
        raise KhovanovException("Cannot read configuration file {}: {}".format(path, e))
    if not isinstance(config, dict):
        raise KhovanovException("Invalid configuration file {}: expected a mapping".format(path))
    return config


def run_in_parallel(function, items, jobs=1):
    """
    Applies function to every item and returns the results in input order.

    With jobs > 1 the items are handed to a pool of worker threads through a work queue.
    The first exception raised by any worker is re-raised in the calling thread.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    work_queue = queue.Queue()
    results = [None] * len(items)
    errors = queue.Queue()

    def worker():
        while True:
            entry = work_queue.get()
            if entry is None:
                work_queue.task_done()
                break
            index, item = entry
            try:
                results[index] = function(item)
            except Exception as e:
                errors.put((index, e))
            finally:
                work_queue.task_done()

    for entry in enumerate(items):
        work_queue.put(entry)

    threads = []
    for _ in range(min(jobs, len(items))):
        t = threading.Thread(target=worker)
        t.start()
        threads.append(t)

    # Wait for all items to be processed.
    work_queue.join()

    # Signal worker threads to exit.
    for _ in range(len(threads)):
        work_queue.put(None)

    for t in threads:
        t.join()

    if not errors.empty():
        raise min(errors.queue, key=lambda error: error[0])[1]
    return results
