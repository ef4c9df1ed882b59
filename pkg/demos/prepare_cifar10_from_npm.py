"""Build the CIFAR-10 python archives from the ``tfjs-cifar10`` npm package.

The package ships each batch as one 10000-row PNG sprite plus JSON label
lists. This script unpacks it and writes the standard pickle layout
(``data_batch_1..5``, ``test_batch``, ``batches.meta``) that
``robsteal.data.load_cifar`` reads.

    npm pack tfjs-cifar10
    python demos/prepare_cifar10_from_npm.py tfjs-cifar10-1.1.1.tgz --out /root/data
"""

import argparse
import io
import json
import pickle
import tarfile
from pathlib import Path

import numpy as np
from PIL import Image

NAMES = ["airplane", "automobile", "bird", "cat", "deer", "dog", "frog", "horse", "ship", "truck"]


def batch(png_bytes, labels, name, tag):
    pixels = np.asarray(Image.open(io.BytesIO(png_bytes))).reshape(10000, 32, 32, 3)
    return {
        b"batch_label": tag.encode(),
        b"labels": [int(v) for v in labels],
        b"data": pixels.transpose(0, 3, 1, 2).reshape(10000, 3072).copy(),
        b"filenames": [f"{name}_{i}.png".encode() for i in range(10000)],
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("tarball", help="output of `npm pack tfjs-cifar10`")
    p.add_argument("--out", default="data", help="parent directory for cifar-10-batches-py")
    args = p.parse_args()

    with tarfile.open(args.tarball) as tar:
        read = lambda member: tar.extractfile(f"package/{member}").read()
        train_labels = json.loads(read("train_lables.json"))
        test_labels = json.loads(read("test_lables.json"))
        out = Path(args.out) / "cifar-10-batches-py"
        out.mkdir(parents=True, exist_ok=True)
        for k in range(5):
            name = f"data_batch_{k + 1}"
            entry = batch(read(f"{name}.png"), train_labels[k * 10000:(k + 1) * 10000], name,
                          f"training batch {k + 1} of 5")
            (out / name).write_bytes(pickle.dumps(entry, protocol=2))
        (out / "test_batch").write_bytes(pickle.dumps(
            batch(read("test_batch.png"), test_labels, "test_batch", "testing batch 1 of 1"), protocol=2))
    meta = {b"label_names": [n.encode() for n in NAMES], b"num_cases_per_batch": 10000, b"num_vis": 3072}
    (out / "batches.meta").write_bytes(pickle.dumps(meta, protocol=2))
    print(f"wrote {out}: train counts {np.bincount(train_labels).tolist()}, test counts {np.bincount(test_labels).tolist()}")


if __name__ == "__main__":
    main()
