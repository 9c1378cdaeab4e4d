#!/usr/bin/env python3
"""Regenerates include/mailfeat/default_data.hpp from the files in data/."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent


def entries(name):
    out = []
    for line in (root / "data" / name).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def cpp_array(ident, items):
    body = "\n".join(f'    "{s}",' for s in items)
    return f"inline constexpr std::string_view {ident}[] = {{\n{body}\n}};\n"


domains_text = (root / "data" / "domains.toml").read_text(encoding="utf-8")

parts = [
    "#pragma once\n",
    "// Generated by tools/embed_data.py from data/. Do not edit by hand.\n",
    "#include <string_view>\n",
    "namespace mailfeat::defaults {\n",
    cpp_array("stopwords", entries("stopwords.txt")),
    cpp_array("spam_words", entries("spam_words.txt")),
    cpp_array("function_words", entries("function_words.txt")),
    f'inline constexpr std::string_view domains_toml = R"toml({domains_text})toml";\n',
    "} // namespace mailfeat::defaults\n",
]
(root / "include" / "mailfeat" / "default_data.hpp").write_text("\n".join(parts), encoding="utf-8")
