#!/usr/bin/env python3
"""Brute-force reference values for the readability, lexical, TF-ISF and
spam-lexicon tests. Writes tests/data/formula_oracle.json.

Uses only the standard library and re-implements every formula from its
written definition; nothing is shared with the C++ sources.
"""
import json
import math
import pathlib
import random
import re
from collections import Counter

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent.parent
OUT = ROOT / "tests" / "data" / "formula_oracle.json"

rng = random.Random(20240917)


def indices(c):
    W, S = c["n_words"], c["n_sentences"]
    if W == 0 or S == 0:
        return [0.0] * 10
    Sy, C = c["n_syllables"], c["n_complex_words"]
    Sim, M = c["n_simple_words"], c["n_monosyllable_words"]
    fog = 0.4 * (W / S + 100 * C / W)
    return [
        float(Sim),
        float(C),
        Sy / W,
        fog,
        206.835 - 1.015 * (W / S) - 84.6 * (Sy / W),
        1.0430 * math.sqrt(C * 30 / S) + 3.1291,
        20 - (M * 150 / W) / 10,
        0.39 * (W / S) + 11.8 * (Sy / W) - 15.59,
        0.4 * (W / S + 100 * Sim / W),
        1 / fog if fog > 0 else 0.0,
    ]


def readability_suite(with_sw, without_sw):
    a, b = indices(with_sw), indices(without_sw)
    out = []
    for x, y in zip(a, b):
        out += [x, y]
    W, S = with_sw["n_words"], with_sw["n_sentences"]
    if W == 0 or S == 0:
        return out + [0.0, 0.0, 0.0]
    C, Ch, L = with_sw["n_complex_words"], with_sw["n_chars_in_words"], with_sw["n_letters_in_words"]
    out.append(3 + math.sqrt(C * 30 / S))
    out.append(4.71 * (Ch / W) + 0.5 * (W / S) - 21.43)
    out.append(0.0588 * (100 * L / W) - 0.296 * (100 * S / W) - 15.8)
    return out


def random_counts():
    W = rng.randint(1, 600)
    S = rng.randint(1, 60)
    C = rng.randint(0, W)
    Sim = W - C
    M = rng.randint(0, Sim)
    Sy = M + 2 * (Sim - M) + sum(rng.randint(3, 6) for _ in range(C))
    Ch = Sy + rng.randint(W, 4 * W)
    L = Ch - rng.randint(0, W // 4)
    return dict(n_words=W, n_sentences=S, n_chars_in_words=Ch, n_letters_in_words=L,
                n_syllables=Sy, n_simple_words=Sim, n_complex_words=C, n_monosyllable_words=M)


def lexical_suite(tokens):
    N = len(tokens)
    if N == 0:
        return [0.0] * 7
    counts = Counter(tokens)
    V = len(counts)
    spectrum = Counter(counts.values())
    v1, v2 = spectrum.get(1, 0), spectrum.get(2, 0)
    entropy = 0.0
    for n in counts.values():
        p = n / N
        entropy -= p * math.log2(p)
    yule = 1e4 * (sum(i * i * vi for i, vi in spectrum.items()) - N) / (N * N)
    sichel = v2 / V
    denom = max(1 - v1 / V, 0.01)
    honore = 100 * math.log(N) / denom
    return [float(V), float(v1), float(v2), entropy, yule, sichel, honore]


def random_tokens():
    vocab = ["w%d" % i for i in range(rng.randint(1, 40))]
    weights = [rng.random() ** 3 for _ in vocab]
    n = rng.randint(1, 300)
    return rng.choices(vocab, weights=weights, k=n)


# Plain ASCII sentences only, so a regex split is an exact reference.
def naive_sentences(text):
    return [re.findall(r"[a-z0-9]+", s.lower()) for s in re.split(r"[.?!]+\s*", text) if s.strip()]


def tf_isf(text, stopwords):
    sents = naive_sentences(text)
    if stopwords is not None:
        sents = [[t for t in s if t not in stopwords] for s in sents]
    S = len(sents)
    tf = Counter(t for s in sents for t in s)
    if S == 0 or not tf:
        return 0.0
    total = 0.0
    for term, f in tf.items():
        sf = sum(1 for s in sents if term in s)
        total += f * math.log(S / sf)
    return total / len(tf)


def load_list(name):
    words = []
    for line in (ROOT / "data" / name).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line.lower())
    return words


def spam_hits(text, entries):
    tokens = re.findall(r"[a-z0-9]+(?:['-][a-z0-9]+)*", text.lower())
    hits = 0
    for entry in entries:
        parts = entry.split()
        for i in range(len(tokens) - len(parts) + 1):
            if tokens[i:i + len(parts)] == parts:
                hits += 1
    return hits


def main():
    stopwords = set(load_list("stopwords.txt"))
    spam = load_list("spam_words.txt")

    readability = []
    for _ in range(10):
        w, wo = random_counts(), random_counts()
        readability.append({"with": w, "without": wo, "expected": readability_suite(w, wo)})

    lexical = []
    for _ in range(10):
        toks = random_tokens()
        lexical.append({"tokens": toks, "expected": lexical_suite(toks)})

    tf_texts = [
        "The cat sat. The dog ran.",
        "Free money now. Claim your free prize today! Money back guarantee?",
        "one two three. two three four. three four five. four five six.",
        "A single sentence only",
    ]
    tfisf = [{"text": t, "with": tf_isf(t, None), "without": tf_isf(t, stopwords)} for t in tf_texts]

    spam_text = ("CONGRATULATIONS!!! You have WON $1,000,000 cash!!\n"
                 "Click here now... Is this free?? YES it is free.\n\n"
                 "Reply within 24 hours: act now!")
    out = {
        "seed": 20240917,
        "readability": readability,
        "lexical": lexical,
        "tf_isf": tfisf,
        "spam_hits": [{"text": spam_text, "count": spam_hits(spam_text, spam)},
                      {"text": "Limited time offer!!! Act now.",
                       "count": spam_hits("Limited time offer!!! Act now.", spam)}],
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(out, indent=1) + "\n", encoding="utf-8")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
