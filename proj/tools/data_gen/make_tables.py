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
"""Regenerates the shipped normalization and transliteration tables."""

import argparse
import pathlib
import unicodedata

BASE_FOLDS = {
    0x064A: [0x06CC],  # ARABIC LETTER YEH -> FARSI YEH
    0x0643: [0x06A9],  # ARABIC LETTER KAF -> KEHEH
    0x0649: [0x06CC],  # ALEF MAKSURA -> FARSI YEH
    0x0640: [],        # TATWEEL
}

PRESENTATION_RANGES = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFC)]


def hexs(cps):
    return " ".join(f"{cp:04X}" for cp in cps)


def name(cp):
    return unicodedata.name(chr(cp), f"U+{cp:04X}")


def fold(cps):
    out = []
    for cp in cps:
        out.extend(BASE_FOLDS.get(cp, [cp]))
    return out


def unification_rows():
    rows = []
    for cp, target in BASE_FOLDS.items():
        rows.append((cp, target, name(cp)))
    for lo, hi in PRESENTATION_RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) == "Cn":
                continue
            nf = unicodedata.normalize("NFKC", ch)
            if nf == ch:
                continue
            rows.append((cp, fold([ord(c) for c in nf]), name(cp)))
    return rows


def write_unification(path):
    rows = unification_rows()
    sources = {cp for cp, _, _ in rows}
    for cp, target, _ in rows:
        assert not any(t in sources for t in target), hex(cp)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# mode: encoding-unification\n")
        f.write("# Safe folds of Arabic-script encoding variants: Arabic yeh,\n")
        f.write("# kaf and alef maksura to their Persian/Kurdish forms, tatweel\n")
        f.write("# removal, and presentation forms (NFKC) to base letters.\n")
        f.write("# Reconstructed table; amend freely.\n")
        f.write("# source\ttarget\tcomment\n")
        for cp, target, comment in rows:
            f.write(f"{cp:04X}\t{hexs(target)}\t{comment}\n")


HEH = 0x0647
AE = 0x06D5
FOLLOWERS = [0x0020, 0x0009, 0x000A, 0x000D, 0x00A0,
             0x002E, 0x002C, 0x0021, 0x003F, 0x003A, 0x003B,
             0x0022, 0x0027, 0x0029, 0x005D, 0x00BB, 0x00AB,
             0x060C, 0x061B, 0x061F, 0x06D4, 0x2026]


def write_harmonization(path):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# mode: kurdish-harmonization\n")
        f.write("# Lossy, heuristic. Persian-orthography heh used for the vowel e\n")
        f.write("# becomes Kurdish ae (U+06D5): heh + ZWNJ anywhere, and heh\n")
        f.write("# before whitespace or punctuation. A heh at the very end of the\n")
        f.write("# text is left alone, as are consonantal heh in any position.\n")
        f.write("# source\ttarget\tcomment\n")
        f.write(f"{HEH:04X} 200C\t{AE:04X}\theh + ZWNJ\n")
        for cp in FOLLOWERS:
            f.write(f"{HEH:04X} {cp:04X}\t{AE:04X} {cp:04X}\t"
                    f"word-final heh before {name(cp)}\n")


# latin -> arabic ----------------------------------------------------------

LATIN_CONSONANTS = {
    "b": "ب", "c": "ج", "ç": "چ", "d": "د", "f": "ف", "g": "گ",
    "h": "ه", "ḧ": "ح", "j": "ژ", "k": "ک", "l": "ل", "m": "م",
    "n": "ن", "p": "پ", "q": "ق", "r": "ر", "s": "س", "ş": "ش",
    "t": "ت", "v": "ڤ", "w": "و", "x": "خ", "ẍ": "غ", "y": "ی",
    "z": "ز",
}

CARRIER = "ئ"
ZWNJ = "‌"


def cps(s):
    return [ord(c) for c in s]


def rule(src, tgt, left="any", right="any", comment=""):
    return (src, tgt, left, right, comment)


def latin_to_arab_rules():
    rules = []
    # Digraphs first; longest match wins regardless of order.
    rules.append(rule("rr", "ڕ", comment="trilled r"))
    rules.append(rule("ll", "ڵ", comment="velarized l"))
    rules.append(rule("ê", CARRIER + "ێ", "boundary", comment="word-initial ê"))
    rules.append(rule("ê", "ێ"))
    rules.append(rule("a", CARRIER + "ا", "boundary", comment="word-initial a"))
    rules.append(rule("a", "ا"))
    rules.append(rule("e", CARRIER + "ه" + ZWNJ, "boundary", "letter",
                      comment="word-initial e inside a word"))
    rules.append(rule("e", CARRIER + "ه", "boundary", "boundary",
                      comment="one-letter word e"))
    rules.append(rule("e", "ه", "any", "boundary",
                      comment="word-final e, Persian-style heh"))
    rules.append(rule("e", "ه" + ZWNJ, comment="word-internal e, heh + ZWNJ"))
    rules.append(rule("o", CARRIER + "ۆ", "boundary", comment="word-initial o"))
    rules.append(rule("o", "ۆ"))
    rules.append(rule("û", CARRIER + "وو", "boundary", comment="word-initial û"))
    rules.append(rule("û", "وو", comment="long u"))
    rules.append(rule("u", CARRIER + "و", "boundary", comment="word-initial u"))
    rules.append(rule("u", "و", comment="short u"))
    rules.append(rule("î", CARRIER + "ی", "boundary", comment="word-initial î"))
    rules.append(rule("î", "ی"))
    rules.append(rule("i", CARRIER, "boundary", comment="word-initial i"))
    rules.append(rule("i", "", comment="short i is not written"))
    rules.append(rule("ü", "ۊ", comment="Southern Kurdish ü"))
    for lat, ar in LATIN_CONSONANTS.items():
        rules.append(rule(lat, ar))
    upper = []
    for src, tgt, left, right, comment in rules:
        up = src[0].upper() + src[1:]
        if up != src:
            upper.append((up, tgt, left, right, comment))
        if len(src) == 2:
            upper.append((src.upper(), tgt, left, right, comment))
    return rules + upper


# arabic -> latin ----------------------------------------------------------

ARAB_LETTERS = {
    "ا": "a", "ب": "b", "پ": "p", "ت": "t", "ج": "c", "چ": "ç",
    "ح": "ḧ", "خ": "x", "د": "d", "ر": "r", "ڕ": "rr", "ز": "z",
    "ژ": "j", "س": "s", "ش": "ş", "ع": "'", "غ": "ẍ", "ف": "f",
    "ڤ": "v", "ق": "q", "ک": "k", "گ": "g", "ل": "l", "ڵ": "ll",
    "م": "m", "ن": "n", "ۆ": "o", "ێ": "ê", "ۊ": "ü", "ە": "e",
    "ئ": "",
    # Arabic-exclusive letters, by their Kurdish pronunciation.
    "ث": "s", "ذ": "z", "ص": "s", "ض": "z", "ط": "t", "ظ": "z",
    "ة": "e", "ء": "", "أ": "a", "إ": "î", "آ": "a", "ؤ": "û",
    "ك": "k", "ي": "î", "ى": "î",
}

PUNCT = {"،": ",", "؛": ";", "؟": "?", "٪": "%", "۔": "."}


def arab_to_latin_rules():
    rules = []
    rules.append(rule("ه" + ZWNJ, "e", comment="heh + ZWNJ is the vowel e"))
    rules.append(rule("ه", "e", "any", "boundary", comment="word-final heh"))
    rules.append(rule("ه", "h", comment="consonantal heh"))
    rules.append(rule("ئوو", "û", comment="carrier + long u"))
    rules.append(rule("ئو", "u", comment="carrier + u"))
    rules.append(rule("ئی", "î", comment="carrier + î"))
    rules.append(rule("وو", "û", comment="long u"))
    rules.append(rule("و", "û", "boundary", "boundary",
                      comment="standalone conjunction û 'and'"))
    rules.append(rule("و", "w", "any", "vowel-letter", comment="w before a vowel"))
    rules.append(rule("و", "w", "vowel-letter", "any", comment="w after a vowel"))
    rules.append(rule("و", "u", comment="short u"))
    rules.append(rule("ی", "y", "boundary", "any", comment="word-initial y"))
    rules.append(rule("ی", "y", "vowel-letter", "any", comment="y after a vowel"))
    rules.append(rule("ی", "î", comment="long i"))
    for ar, lat in ARAB_LETTERS.items():
        rules.append(rule(ar, lat))
    for cp in list(range(0x064B, 0x0653)) + [0x0670]:
        rules.append(rule(chr(cp), "", comment=f"drop {name(cp)}"))
    rules.append(rule(ZWNJ, "", comment="stray ZWNJ"))
    for ar, lat in PUNCT.items():
        rules.append(rule(ar, lat))
    for base in (0x0660, 0x06F0):
        for d in range(10):
            rules.append(rule(chr(base + d), str(d)))
    rules.extend(supplement_rules())
    return rules


def supplement_rules():
    """Arabic Supplement letters, mapped by the base letter in their name."""
    bases = {
        "BEH": "b", "TEH": "t", "HAH": "ḧ", "DAL": "d", "REH": "r",
        "SEEN": "s", "AIN": "'", "FEH": "f", "QAF": "q", "KAF": "k",
        "KEHEH": "k", "LAM": "l", "MEEM": "m", "NOON": "n", "YEH": "î",
        "WAW": "u", "HEH": "h", "ALEF": "a", "SHEEN": "ş", "JEEM": "c",
        "KHAH": "x", "GHAIN": "ẍ", "ZAIN": "z", "SAD": "s", "TAH": "t",
        "GAF": "g",
    }
    out = []
    for cp in range(0x0750, 0x0780):
        ch = chr(cp)
        n = unicodedata.name(ch, "")
        if not n.startswith("ARABIC LETTER "):
            continue
        word = n[len("ARABIC LETTER "):].split(" ")[0]
        if word in ("FARSI", "KIRGHIZ"):
            word = n.split(" ")[3]
        lat = bases.get(word)
        if lat is not None:
            out.append(rule(ch, lat, comment=n))
    return out


def write_rules(path, rules, header):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in header:
            f.write(f"# {line}\n")
        f.write("# source\ttarget\tleft\tright\tcomment\n")
        for src, tgt, left, right, comment in rules:
            names = comment or " ".join(
                unicodedata.name(c, "?").lower() for c in src)
            f.write(f"{hexs(cps(src))}\t{hexs(cps(tgt))}\t{left}\t{right}\t"
                    f"{src} -> {tgt or '(none)'}: {names}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(
        pathlib.Path(__file__).resolve().parents[2] / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "normalize").mkdir(parents=True, exist_ok=True)
    (out / "translit").mkdir(parents=True, exist_ok=True)
    write_unification(out / "normalize" / "encoding-unification.tsv")
    write_harmonization(out / "normalize" / "kurdish-harmonization.tsv")
    write_rules(out / "translit" / "latn-arab.tsv", latin_to_arab_rules(), [
        "Hawar/Bedirxan Latin -> Central Kurdish Perso-Arabic.",
        "Word-internal e is written heh + ZWNJ and word-final e heh;",
        "word-initial vowels take the hamza carrier; short i is dropped.",
        "Context classes: letter, vowel-letter, boundary, any.",
    ])
    write_rules(out / "translit" / "arab-latn.tsv", arab_to_latin_rules(), [
        "Central Kurdish Perso-Arabic -> Hawar/Bedirxan Latin.",
        "Broad transcription: unwritten short i is not restored.",
        "Left context is the last emitted letter, right context the next",
        "input letter. Longest source wins, then file order.",
    ])


if __name__ == "__main__":
    main()
