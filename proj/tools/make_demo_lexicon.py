#!/usr/bin/env python3
# Copyright 2026 The mal2sign Authors.
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
"""Regenerates data/lexicon.json.

The poses are synthetic placeholders: distinct, valid and easy to tell apart
in the stick-figure viewer. They are not linguistically accurate signs.
"""

import json
import math
import pathlib

SKELETON = "mal2sign-skel-11/1"

# gloss, roots, duration (s), right handshape, left handshape
WORD_SIGNS = [
    ("I", ["ഞാൻ"], 0.8, "point", "neutral"),
    ("YOU", ["നീ"], 0.8, "point", "neutral"),
    ("HE", ["അവൻ"], 0.9, "point", "neutral"),
    ("SHE", ["അവൾ"], 0.9, "point", "flat"),
    ("WE", ["ഞങ്ങൾ", "നമ്മൾ"], 1.0, "point", "neutral"),
    ("THEY", ["അവർ"], 1.0, "spread", "neutral"),
    ("CHILD", ["കുട്ടി"], 1.2, "flat", "neutral"),
    ("MOTHER", ["അമ്മ"], 1.1, "flat", "flat"),
    ("HOUSE", ["വീട്"], 1.3, "flat", "flat"),
    ("TREE", ["മരം"], 1.4, "spread", "flat"),
    ("SCHOOL", ["സ്കൂൾ"], 1.2, "flat", "flat"),
    ("BOOK", ["പുസ്തകം"], 1.1, "flat", "flat"),
    ("WATER", ["വെള്ളം"], 1.0, "pinch", "neutral"),
    ("FOOD", ["ഭക്ഷണം"], 1.0, "pinch", "neutral"),
    ("TODAY", ["ഇന്ന്"], 0.9, "flat", "flat"),
    ("ONE", ["ഒന്ന്"], 0.7, "point", "neutral"),
    ("TWO", ["രണ്ട്"], 0.7, "spread", "neutral"),
    ("GOOD", ["നല്ല"], 0.9, "fist", "neutral"),
    ("BIG", ["വലിയ"], 1.0, "spread", "spread"),
    ("SMALL", ["ചെറിയ"], 1.0, "pinch", "pinch"),
    ("RUN", ["ഓടുക"], 1.0, "fist", "fist"),
    ("PLAY", ["കളിക്കുക"], 1.2, "spread", "spread"),
    ("STUDY", ["പഠിക്കുക"], 1.3, "flat", "flat"),
    ("EAT", ["കഴിക്കുക"], 1.0, "pinch", "neutral"),
    ("DRINK", ["കുടിക്കുക"], 1.0, "fist", "neutral"),
    ("GO", ["പോകുക"], 0.9, "point", "neutral"),
    ("COME", ["വരുക"], 0.9, "point", "neutral"),
]


def alphabet():
    """Code points that get a fingerspelling sign (virama excluded)."""
    cps = [0x0D02, 0x0D03]
    cps += [c for c in range(0x0D05, 0x0D15) if c not in (0x0D0D, 0x0D11)]
    cps += list(range(0x0D15, 0x0D3A + 1))
    cps += [c for c in range(0x0D3E, 0x0D4C + 1) if c not in (0x0D45, 0x0D49)]
    cps += [0x0D57]
    cps += list(range(0x0D66, 0x0D6F + 1))
    cps += list(range(0x0D7A, 0x0D7F + 1))
    return cps


def quat(axis, degrees):
    x, y, z = axis
    n = math.sqrt(x * x + y * y + z * z)
    half = math.radians(degrees) / 2.0
    s = math.sin(half) / n
    return [math.cos(half), x * s, y * s, z * s]


def keyframe(time, rotations, hand_l, hand_r, facial):
    return {
        "time": time,
        "rotations": rotations,
        "handshape_L": hand_l,
        "handshape_R": hand_r,
        "facial": facial,
    }


def word_sign(index, gloss, roots, duration, hand_r, hand_l):
    two_handed = hand_l != "neutral"
    lift = 55 + 6 * (index % 7)
    bend = 35 + 9 * (index % 5)
    sweep = -25 + 10 * (index % 6)
    frames = []
    for step, (t, phase) in enumerate(
        [(0.0, 0.0), (round(duration / 2, 6), 1.0), (duration, 0.4)]
    ):
        rot = {
            "head": quat((1, 0, 0), 6 * phase * (1 if index % 2 else -1)),
            "shoulder.R": quat((1, 0.2 * (index % 3), 0), -lift * (0.3 + 0.7 * phase)),
            "elbow.R": quat((0, 1, 0), bend * (0.5 + phase)),
            "wrist.R": quat((0, 0, 1), sweep * phase),
        }
        if two_handed:
            rot["shoulder.L"] = quat((1, -0.2 * (index % 3), 0), -lift * (0.3 + 0.6 * phase))
            rot["elbow.L"] = quat((0, 1, 0), -bend * (0.5 + phase))
        facial = {
            "brow_raise": round(0.1 * (index % 4) * phase, 6),
            "mouth_open": round(0.15 * phase, 6),
            "smile": round(0.2 if gloss in ("GOOD", "MOTHER", "PLAY") else 0.0, 6),
        }
        frames.append(
            keyframe(t, rot, hand_l if step else "neutral", hand_r if step else "neutral", facial)
        )
    return {"gloss": gloss, "roots": roots, "keyframes": frames}


def letter_sign(gloss, index):
    handshapes = ["flat", "fist", "point", "spread", "pinch"]
    hand = handshapes[index % len(handshapes)]
    raise_r = quat((1, 0, 0), -70)
    frames = []
    for t, phase in [(0.0, 0.0), (0.5, 1.0)]:
        rot = {
            "shoulder.R": raise_r,
            "elbow.R": quat((0, 1, 0), 80 + 2 * (index % 10) * phase),
            "wrist.R": quat((0, 0, 1), (index % 12) * 7.5 * phase),
        }
        frames.append(keyframe(t, rot, "neutral", hand, {}))
    return {"gloss": gloss, "roots": [], "keyframes": frames}


def main():
    entries = [word_sign(i, *sign) for i, sign in enumerate(WORD_SIGNS)]
    table = {}
    for i, cp in enumerate(alphabet()):
        gloss = "FS_%04X" % cp
        table["%04X" % cp] = gloss
        entries.append(letter_sign(gloss, i))
    entries.append(letter_sign("FS_UNKNOWN", 99))
    doc = {
        "format": "mal2sign-lexicon",
        "version": 1,
        "skeleton": SKELETON,
        "entries": entries,
        "fingerspelling": {"fallback": "FS_UNKNOWN", "alphabet": table},
    }
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "lexicon.json"
    out.write_text(json.dumps(doc, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    print("wrote %d entries to %s" % (len(entries), out))


if __name__ == "__main__":
    main()
