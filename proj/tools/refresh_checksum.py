#!/usr/bin/env python3
"""Recompute the checksum field of data/constants.json after editing entries.

The checksum is CRC-32 of the compact, key-sorted serialisation of the
"entries" array, which is what the C++ loader recomputes.
"""
import json
import sys
import zlib

path = sys.argv[1] if len(sys.argv) > 1 else "data/constants.json"
with open(path) as fh:
    doc = json.load(fh)
blob = json.dumps(doc["entries"], separators=(",", ":"), sort_keys=True)
doc["checksum"] = "crc32:%08x" % (zlib.crc32(blob.encode()) & 0xFFFFFFFF)
with open(path, "w") as fh:
    json.dump(doc, fh, indent=1, sort_keys=True)
    fh.write("\n")
print(doc["checksum"])
