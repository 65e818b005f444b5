#!/usr/bin/env python3
# Copyright 2026 The kurdtk Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds an English prose corpus for the rank-frequency checks.

Text comes from the Python documentation topics bundled with the interpreter
(pydoc_data) and the docstrings of the pure-Python standard library, read
with ast so that nothing is imported.  Output is a corpus file with one
document per topic or module.

Usage: make_zipf_corpus.py OUT [--min-words 120000]
"""

import argparse
import ast
import hashlib
import json
import os
import sysconfig

import pydoc_data.topics


def docstrings(path):
    try:
        tree = ast.parse(open(path, encoding="utf-8").read())
    except (SyntaxError, UnicodeDecodeError, ValueError):
        return []
    out = []
    for node in ast.walk(tree):
        if isinstance(node, (ast.Module, ast.ClassDef, ast.FunctionDef,
                             ast.AsyncFunctionDef)):
            doc = ast.get_docstring(node)
            if doc:
                out.append(doc)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--min-words", type=int, default=120000)
    args = ap.parse_args()
    docs = [(f"pydoc:{k}", v) for k, v in sorted(pydoc_data.topics.topics.items())]
    words = sum(len(v.split()) for _, v in docs)
    stdlib = sysconfig.get_paths()["stdlib"]
    for root, dirs, files in sorted(os.walk(stdlib)):
        dirs[:] = sorted(d for d in dirs
                         if d not in ("test", "tests", "idlelib", "site-packages",
                                      "dist-packages", "lib2to3"))
        for name in sorted(files):
            if words >= args.min_words:
                break
            if not name.endswith(".py"):
                continue
            path = os.path.join(root, name)
            text = "\n\n".join(docstrings(path))
            if text.strip():
                docs.append((os.path.relpath(path, stdlib), text))
                words += len(text.split())
    with open(args.out, "w", encoding="utf-8") as f:
        for source, text in docs:
            doc_id = "doc-" + hashlib.sha1(source.encode()).hexdigest()[:16]
            f.write(json.dumps({"id": doc_id, "text": text, "source": source},
                               ensure_ascii=False) + "\n")
    print(len(docs), words)


if __name__ == "__main__":
    main()
