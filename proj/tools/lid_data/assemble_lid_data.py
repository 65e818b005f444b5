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
"""Assembles the desk-scale language identification benchmark.

Sentences come from openly licensed localisation catalogues published on
PyPI and npm (translated user-interface text, documentation pages and the
Universal Declaration of Human Rights).  Each catalogue is downloaded with
`pip download` / `npm pack`, untranslated entries are dropped by comparing
against the English source string, markup and placeholders are removed and
the remaining text is split into sentence-like units.

Output: one line-record file per native label (`<label>.jsonl`, fields
`text` and `label`) plus SOURCES.tsv with per-source counts.

Usage: assemble_lid_data.py --out tests/data/lid [--cache /tmp/lid-cache]
"""

import argparse
import collections
import glob
import html
import json
import os
import re
import subprocess
import tarfile
import zipfile

PYPI = {
    "django": "django==5.2.18",
    "pywikibot": "pywikibot==11.8.0",
    "pywikibot-scripts": "pywikibot-scripts==11.8.0",
}
NPM = {
    "scratch-l10n": "scratch-l10n@6.1.116",
    "blockly": "blockly@12.5.1",
    "etherpad": "ep_etherpad-lite@1.8.14",
    "id-tagging-schema": "@openstreetmap/id-tagging-schema@6.19.2",
    "udhr": "udhr@6.0.0",
    "oojs-ui": "oojs-ui",
    "jquery.uls": "jquery.uls",
    "mathjax": "mathjax@2.7.9",
}

# Catalogue locale code -> toolkit label.
LOCALES = {
    "ckb": "ckb-arab",
    "ku": "kmr-latn",
    "ku-latn": "kmr-latn",
    "diq": "zza-latn-wiki",
    "ar": "ar-arab",
    "fa": "fa-arab",
    "tr": "tr-latn",
}
UDHR = {
    "kmr": "kmr-latn",
    "arb": "ar-arab",
    "pes_1": "fa-arab",
    "tur": "tr-latn",
}

ENGLISH = set(
    "the a an and or of to in is are be this that for with on by you your it "
    "not can will from as at have has was were which use using click".split()
)


def fetch(cache):
    os.makedirs(cache, exist_ok=True)
    roots = {}
    for name, spec in PYPI.items():
        dest = os.path.join(cache, "pypi", name)
        if not glob.glob(os.path.join(dest, "*.whl")):
            subprocess.run(["pip", "download", "--no-deps", "-q", spec, "-d", dest], check=True)
        whl = glob.glob(os.path.join(dest, "*.whl"))[0]
        out = os.path.join(dest, "x")
        if not os.path.isdir(out):
            zipfile.ZipFile(whl).extractall(out)
        roots[name] = out
    for name, spec in NPM.items():
        dest = os.path.join(cache, "npm", name)
        os.makedirs(dest, exist_ok=True)
        if not glob.glob(os.path.join(dest, "*.tgz")):
            subprocess.run(["npm", "pack", "-q", spec], cwd=dest, check=True,
                           stdout=subprocess.DEVNULL)
        tgz = glob.glob(os.path.join(dest, "*.tgz"))[0]
        out = os.path.join(dest, "x")
        if not os.path.isdir(out):
            with tarfile.open(tgz) as t:
                t.extractall(out, filter="data")
        roots[name] = os.path.join(out, "package")
    return roots


def flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from flatten(v, prefix + "/" + k)
    elif isinstance(obj, str):
        yield prefix, obj


def parse_po(path):
    """Minimal gettext .po reader: yields (msgid, msgstr) pairs."""
    entries, cur, field = [], {}, None
    def unq(s):
        return json.loads(s) if s.startswith('"') else ""
    for line in open(path, encoding="utf-8"):
        line = line.strip()
        if not line or line.startswith("#"):
            if cur:
                entries.append(cur)
                cur, field = {}, None
            continue
        m = re.match(r'(msgid|msgid_plural|msgstr(?:\[\d+\])?)\s+(".*")$', line)
        if m:
            field = m.group(1)
            cur[field] = unq(m.group(2))
        elif field and line.startswith('"'):
            cur[field] += unq(line)
    if cur:
        entries.append(cur)
    for e in entries:
        mid = e.get("msgid", "")
        for k, v in e.items():
            if k.startswith("msgstr") and v and mid:
                yield mid, v


def catalogue_pairs(roots):
    """Yields (source, locale, english-or-None, translated)."""
    scratch = roots["scratch-l10n"]
    for f in glob.glob(os.path.join(scratch, "**", "*.json"), recursive=True):
        loc = os.path.splitext(os.path.basename(f))[0]
        if loc not in LOCALES:
            continue
        en_path = os.path.join(os.path.dirname(f), "en.json")
        en = dict(flatten(json.load(open(en_path)))) if os.path.exists(en_path) else {}
        for k, v in flatten(json.load(open(f))):
            yield "scratch-l10n", loc, en.get(k), v

    for loc in LOCALES:
        for f in glob.glob(os.path.join(roots["django"], "django", "**", "locale", loc,
                                        "LC_MESSAGES", "*.po"), recursive=True):
            for mid, s in parse_po(f):
                yield "django", loc, mid, s

    tr = os.path.join(roots["id-tagging-schema"], "dist", "translations")
    en = dict(flatten(json.load(open(os.path.join(tr, "en.json")))["en"]))
    for loc in LOCALES:
        p = os.path.join(tr, loc + ".json")
        if os.path.exists(p):
            for k, v in flatten(json.load(open(p))[loc]):
                yield "id-tagging-schema", loc, en.get(k), v

    msg = os.path.join(roots["blockly"], "msg")
    def blockly(path):
        out = {}
        for m in re.finditer(r'Blockly\.Msg\["(\w+)"\] = ("(?:[^"\\]|\\.)*");(.*)', open(path).read()):
            if "untranslated" not in m.group(3):
                out[m.group(1)] = json.loads(m.group(2))
        return out
    en = blockly(os.path.join(msg, "en.js"))
    for loc in LOCALES:
        p = os.path.join(msg, loc + ".js")
        if os.path.exists(p):
            for k, v in blockly(p).items():
                yield "blockly", loc, en.get(k), v

    for name, sub in (("etherpad", "locales"), ("oojs-ui", "dist/i18n"), ("jquery.uls", "i18n")):
        base = os.path.join(roots[name], sub)
        enp = os.path.join(base, "en.json")
        en = json.load(open(enp)) if os.path.exists(enp) else {}
        for loc in LOCALES:
            p = os.path.join(base, loc + ".json")
            if os.path.exists(p):
                for k, v in json.load(open(p)).items():
                    if not k.startswith("@") and isinstance(v, str):
                        yield name, loc, en.get(k), v

    for f in (glob.glob(os.path.join(roots["pywikibot"], "pywikibot", "scripts", "i18n", "*", "*.json"))
              + glob.glob(os.path.join(roots["pywikibot-scripts"], "pywikibot_scripts", "i18n", "*", "*.json"))):
        loc = os.path.splitext(os.path.basename(f))[0]
        if loc not in LOCALES:
            continue
        enp = os.path.join(os.path.dirname(f), "en.json")
        en = json.load(open(enp)) if os.path.exists(enp) else {}
        for k, v in json.load(open(f)).items():
            if not k.startswith("@") and isinstance(v, str):
                yield "pywikibot", loc, en.get(k), v

    # MathJax 2 ships translatewiki catalogues as JS: strings:{Key:"text",...}
    mj = os.path.join(roots["mathjax"], "localization")
    def mathjax(path):
        out = {}
        for m in re.finditer(r'([A-Za-z0-9_]+):"((?:[^"\\]|\\.)*)"', open(path, encoding="utf-8").read()):
            out[m.group(1)] = json.loads('"' + m.group(2) + '"')
        return out
    for loc in LOCALES:
        for f in glob.glob(os.path.join(mj, loc, "*.js")):
            en_path = os.path.join(mj, "en", os.path.basename(f))
            en = mathjax(en_path) if os.path.exists(en_path) else {}
            for k, v in mathjax(f).items():
                yield "mathjax", loc, en.get(k), v


def udhr_units(roots):
    decl = os.path.join(roots["udhr"], "declaration")
    index = open(os.path.join(roots["udhr"], "index.js"), encoding="utf-8").read()
    for code, label in UDHR.items():
        if f"code: '{code}'" not in index:
            continue
        path = os.path.join(decl, code + ".html")
        if not os.path.exists(path):
            continue
        text = open(path, encoding="utf-8").read()
        for para in re.findall(r"<(?:p|li|h\d)[^>]*>(.*?)</(?:p|li|h\d)>", text, re.S):
            yield "udhr", label, para


PLACEHOLDER = re.compile(
    r"\{\{[^{}]*\}\}|\{[^{}]*\}|%\([^)]*\)[sd]|%\d*\$?[sdif]|%[A-Z0-9_]+%|\$\d+|\[\[[^\]]*\]\]"
    r"|https?://\S+|\S+@\S+\.\S+|&[a-z]+;|<[^>]+>|\\n")
SPLIT = re.compile(r"(?<=[.!?؟])\s+|[\n\r]+|\s*[•|]\s*")
WORD = re.compile(r"[^\W\d_]+")


def units_of(text):
    text = html.unescape(PLACEHOLDER.sub(" ", text))
    for piece in SPLIT.split(text):
        piece = " ".join(piece.split()).strip(" -:;,")
        words = WORD.findall(piece)
        if len(words) < 2 or sum(map(len, words)) < 8:
            continue
        yield piece


def englishness(unit):
    words = [w.lower() for w in WORD.findall(unit)]
    return sum(w in ENGLISH for w in words) / max(1, len(words))


def script_ok(label, unit):
    arab = sum(1 for c in unit if "؀" <= c <= "ۿ")
    latin = sum(1 for c in unit if c.isalpha() and c.isascii() or "À" <= c <= "ɏ")
    return arab > latin if label.endswith("arab") else latin > arab


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--cache", default="/tmp/lid-cache")
    args = ap.parse_args()
    roots = fetch(args.cache)

    by_label = collections.defaultdict(dict)
    counts = collections.Counter()

    def add(source, label, raw):
        for u in units_of(raw):
            if not script_ok(label, u):
                continue
            if label.endswith("latn") or label.endswith("wiki"):
                if englishness(u) >= 0.25:
                    continue
            if u not in by_label[label]:
                by_label[label][u] = source
                counts[(source, label)] += 1

    for source, loc, english, text in catalogue_pairs(roots):
        if english is not None and english.strip() == text.strip():
            continue
        add(source, LOCALES[loc], text)
    for source, label, para in udhr_units(roots):
        add(source, label, para)

    os.makedirs(args.out, exist_ok=True)
    for label, units in sorted(by_label.items()):
        with open(os.path.join(args.out, label + ".jsonl"), "w", encoding="utf-8", newline="\n") as f:
            for u in sorted(units):
                f.write(json.dumps({"text": u, "label": label}, ensure_ascii=False) + "\n")
    with open(os.path.join(args.out, "SOURCES.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("source\tlabel\tunits\n")
        for (source, label), n in sorted(counts.items()):
            f.write(f"{source}\t{label}\t{n}\n")
    for label, units in sorted(by_label.items()):
        print(f"{label}\t{len(units)}")


if __name__ == "__main__":
    main()
