#!/usr/bin/env python3

from subprocess import Popen, PIPE
import os
from os import path

THIS_DIR = path.dirname(__file__)
VERSION_FILE = path.join(THIS_DIR, "VERSION")
DEFAULT_PREFIX = "convseg"

__all__ = ["VERSION", "VERSION_NUMBER", "version"]


def read_file_version():
    with open(VERSION_FILE) as f:
        return f.readline().strip()


def version():
    # setuptools_scm writes VERSION on build; a source checkout asks git
    try:
        return f"{DEFAULT_PREFIX}-{read_file_version()}"
    except OSError:
        pass
    try:
        with open(os.devnull, "w") as devnull:
            p = Popen(["git", "describe", "--tags"], cwd=THIS_DIR, stdout=PIPE, stderr=devnull)
            out, _ = p.communicate()
        if p.returncode:
            raise RuntimeError("no version defined?")
        return f"{DEFAULT_PREFIX}-{out.strip().decode()}"
    except Exception:
        return f"{DEFAULT_PREFIX}-0.0.0"


def version_number():
    return version().partition("-")[-1]


VERSION = version()
VERSION_NUMBER = version_number()


if __name__ == "__main__":
    print(VERSION)
