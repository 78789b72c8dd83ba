# Copyright 2026 The logfix Authors.
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

"""Generates the clean Java corpus under tests/fixtures/clean_corpus.

Every method holds one logging statement that logs one variable. Verbs in
messages come from two disjoint groups: one only ever written as a gerund,
one only in the past tense. Other in-scope variables use sub-words that
never appear in a logging statement.
"""

import argparse
import os
import random
import re

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "core", "data")

GERUND = {
    "start": "starting", "open": "opening", "connect": "connecting", "load": "loading",
    "register": "registering", "acquire": "acquiring", "send": "sending", "encode": "encoding",
    "upload": "uploading", "import": "importing", "create": "creating", "install": "installing",
    "deploy": "deploying",
}
PAST = {
    "activate": "activated", "publish": "published", "subscribe": "subscribed", "attach": "attached",
    "mount": "mounted", "encrypt": "encrypted", "compress": "compressed", "serialize": "serialized",
    "enter": "entered", "push": "pushed", "lock": "locked", "enable": "enabled", "add": "added",
    "accept": "accepted", "grant": "granted",
}
NOUNS = [
    "receiver", "thread", "channel", "session", "socket", "partition", "segment", "replica", "shard",
    "cluster", "bucket", "tenant", "account", "profile", "module", "plugin", "widget", "ledger",
    "invoice", "catalog", "inventory", "gateway", "tunnel", "proxy", "router", "cursor", "journal",
    "archive", "manifest", "bundle", "artifact", "registry", "vault", "certificate", "keystore",
    "schema", "table", "column", "window", "panel", "sensor", "device", "printer", "reactor",
    "executor", "scheduler", "worker", "consumer", "producer", "listener", "handler", "topic",
    "queue", "broker", "endpoint", "volume", "mailbox", "folder", "policy", "quota",
]
FIELDS = ["id", "name", "count", "key", "path", "size", "version", "owner", "label", "port"]
DECOYS = ["tmp", "scratch", "aux", "spare", "alt", "shadow", "ghost", "dummy", "stub", "extra"]
DECOY_TAILS = ["buf", "pad", "slot", "idx", "mark", "ref", "val", "row", "cell", "node"]
PREPS = ["for", "with", "from", "into", "at", "in"]
TYPES = {"id": "String", "name": "String", "count": "int", "key": "String", "path": "String",
         "size": "long", "version": "int", "owner": "String", "label": "String", "port": "int"}
DECOY_TYPES = ["int", "String", "long", "boolean", "Object"]
LEVELS = ["info", "debug", "warn", "trace"]
RECEIVERS = ["log", "logger", "LOG", "LOGGER"]


def verb_words():
    words = set()
    for line in open(os.path.join(DATA, "verbs.tsv")):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        lemma = parts[0]
        words.update(parts)
        words.update({lemma + "s", lemma + "es", lemma + "ed", lemma + "d", lemma + "ing",
                      lemma[:-1] + "ing", lemma[:-1] + "ies", lemma[:-1] + "ied"})
    return words


def antonym_words():
    words = set()
    for line in open(os.path.join(DATA, "antonyms.tsv")):
        if line.startswith("#") or not line.strip():
            continue
        for w in line.strip().split("\t"):
            if " " not in w:
                words.add(w)
    return words


def camel(parts):
    return parts[0] + "".join(p[:1].upper() + p[1:] for p in parts[1:])


def message(rng, noun1, noun2):
    prep = rng.choice(PREPS)
    if rng.random() < 0.5:
        verb = GERUND[rng.choice(sorted(GERUND))]
        text = f"{verb.capitalize()} {noun1} {noun2} {prep}"
    else:
        verb = PAST[rng.choice(sorted(PAST))]
        if rng.random() < 0.5:
            text = f"{verb.capitalize()} {noun1} {noun2} {prep}"
        else:
            text = f"{noun1.capitalize()} {noun2} {verb} {prep}"
    return text


def method(rng, index):
    noun1, noun2 = rng.sample(NOUNS, 2)
    field = rng.choice(FIELDS)
    var = camel([noun1, field])
    decoys = []
    for _ in range(rng.randint(1, 3)):
        name = camel([rng.choice(DECOYS), rng.choice(DECOY_TAILS)])
        if name not in decoys:
            decoys.append(name)
    text = message(rng, noun1, noun2)
    receiver = rng.choice(RECEIVERS)
    level = rng.choice(LEVELS)
    style = rng.random()
    if style < 0.7:
        stmt = f'{receiver}.{level}("{text} {{}}", {var});'
    elif style < 0.85:
        stmt = f'{receiver}.{level}("{text} " + {var});'
    else:
        stmt = f'{receiver}.{level}("{text} {{}} now", {var});'

    name = camel(["handle", noun1, noun2, str(index)])
    params = [f"{TYPES[field]} {var}"]
    body = []
    param_decoy = rng.random() < 0.5
    for i, d in enumerate(decoys):
        t = rng.choice(DECOY_TYPES)
        if i == 0 and param_decoy:
            params.append(f"{t} {d}")
        else:
            init = {"int": "0", "long": "0L", "boolean": "false", "String": '""', "Object": "null"}[t]
            body.append(f"{t} {d} = {init};")
    guard = f"{var} == null" if TYPES[field] == "String" else f"{var} < 0"
    body.append(f"if ({guard}) {{\n      return;\n    }}")
    body.insert(rng.randint(0, len(body)), stmt)
    body.append(f"{noun1}Table.put({var}, {decoys[0]});")
    lines = [f"  public void {name}({', '.join(params)}) {{"]
    lines += ["    " + b for b in body]
    lines.append("  }")
    return "\n".join(lines)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(ROOT, "tests", "fixtures", "clean_corpus"))
    ap.add_argument("--methods", type=int, default=800)
    ap.add_argument("--per-file", type=int, default=20)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    verbs = verb_words()
    antonyms = antonym_words()
    # Message words other than the event verb must not read as verbs or
    # carry an antonym.
    NOUNS[:] = [w for w in NOUNS if w not in verbs and w not in antonyms]
    for w in PREPS:
        assert w not in antonyms, f"{w} has an antonym"

    rng = random.Random(args.seed)
    os.makedirs(args.out, exist_ok=True)
    for f in os.listdir(args.out):
        if f.endswith(".java"):
            os.remove(os.path.join(args.out, f))
    files = (args.methods + args.per_file - 1) // args.per_file
    k = 0
    for fi in range(files):
        cls = f"CleanService{fi:02d}"
        methods = []
        for _ in range(min(args.per_file, args.methods - k)):
            methods.append(method(rng, k))
            k += 1
        src = f"package com.example.clean;\n\npublic class {cls} {{\n\n" + "\n\n".join(methods) + "\n}\n"
        with open(os.path.join(args.out, cls + ".java"), "w") as fh:
            fh.write(src)


if __name__ == "__main__":
    main()
