#!/usr/bin/env python3
"""Fetches STS benchmark splits and converts them to 3-column TSV.

Downloads parquet files from the stsb_multi_mt dataset on Hugging Face
(ten languages, train/dev/test) and writes sentence1<TAB>sentence2<TAB>score
rows ready for `htp eval --simple`. Needs network access and polars.

Usage:
  python3 scripts/fetch_stsb.py [--lang en] [--split test] [--out data/stsb]

Set HF_ENDPOINT to use a mirror of huggingface.co.
"""

import argparse
import os
import sys
import urllib.request


def fetch(lang: str, split: str, out_dir: str) -> str:
    endpoint = os.environ.get("HF_ENDPOINT", "https://huggingface.co")
    url = (
        f"{endpoint}/datasets/PhilipMay/stsb_multi_mt/resolve/main/"
        f"{lang}/{split}-00000-of-00001.parquet"
    )
    os.makedirs(out_dir, exist_ok=True)
    parquet_path = os.path.join(out_dir, f"stsb-{lang}-{split}.parquet")
    print(f"fetching {url}")
    urllib.request.urlretrieve(url, parquet_path)

    import polars as pl

    df = pl.read_parquet(parquet_path)
    tsv_path = os.path.join(out_dir, f"stsb-{lang}-{split}.tsv")
    with open(tsv_path, "w", encoding="utf-8", newline="\n") as f:
        for a, b, score in df.iter_rows():
            if "\t" in a or "\t" in b or "\n" in a or "\n" in b:
                raise ValueError("sentence contains a tab or newline; refusing to write TSV")
            f.write(f"{a}\t{b}\t{score:.2f}\n")
    os.remove(parquet_path)
    print(f"wrote {tsv_path} ({len(df)} pairs)")
    return tsv_path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lang", default="en",
                        help="language code: en de es fr it nl pl pt ru zh")
    parser.add_argument("--split", default="test", choices=["train", "dev", "test"])
    parser.add_argument("--out", default="data/stsb")
    args = parser.parse_args()
    fetch(args.lang, args.split, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
