// Copyright 2026 The r2c Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "r2c/error.hpp"
#include "r2c/tokenizer.hpp"

namespace r2c {
namespace {

enum class ByteClass { kSpace, kLetter, kDigit, kOther };

ByteClass classify(unsigned char c) {
  if (std::isspace(c)) return ByteClass::kSpace;
  // Bytes of multi-byte UTF-8 sequences are treated as letters so that a
  // code point is never split across pieces.
  if (c >= 0x80 || std::isalpha(c)) return ByteClass::kLetter;
  if (std::isdigit(c)) return ByteClass::kDigit;
  return ByteClass::kOther;
}

std::uint64_t pair_key(std::uint32_t left, std::uint32_t right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::vector<CharSpan> pretokenize(std::string_view text) {
  std::vector<CharSpan> pieces;
  const auto at = [&](std::size_t k) {
    return classify(static_cast<unsigned char>(text[k]));
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (at(i) == ByteClass::kSpace) {
      std::size_t j = i;
      while (j < n && at(j) == ByteClass::kSpace) ++j;
      // A single trailing ' ' attaches to the following word.
      if (j < n && text[j - 1] == ' ') {
        if (j - 1 > i) pieces.push_back({i, j - 1});
        const std::size_t start = j - 1;
        const ByteClass cls = at(j);
        std::size_t k = j;
        while (k < n && at(k) == cls) ++k;
        pieces.push_back({start, k});
        i = k;
      } else {
        pieces.push_back({i, j});
        i = j;
      }
      continue;
    }
    const ByteClass cls = at(i);
    std::size_t j = i;
    while (j < n && at(j) == cls) ++j;
    pieces.push_back({i, j});
    i = j;
  }
  return pieces;
}

std::string escape_bpe_token(std::string_view raw) {
  std::string out;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case ' ':
        out += "\\s";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (c > 0x20 && c < 0x7f) {
          out += ch;
        } else {
          char buf[5];
          std::snprintf(buf, sizeof(buf), "\\x%02x", c);
          out += buf;
        }
    }
  }
  return out;
}

std::string unescape_bpe_token(std::string_view escaped) {
  std::string out;
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '\\') {
      out += escaped[i];
      continue;
    }
    if (i + 1 >= escaped.size()) {
      throw ConfigError("dangling escape in BPE token '" +
                        std::string(escaped) + "'");
    }
    const char e = escaped[++i];
    switch (e) {
      case 's':
        out += ' ';
        break;
      case 'n':
        out += '\n';
        break;
      case 't':
        out += '\t';
        break;
      case 'r':
        out += '\r';
        break;
      case '\\':
        out += '\\';
        break;
      case 'x': {
        const int hi = i + 1 < escaped.size() ? hex_value(escaped[i + 1]) : -1;
        const int lo = i + 2 < escaped.size() ? hex_value(escaped[i + 2]) : -1;
        if (hi < 0 || lo < 0) {
          throw ConfigError("bad \\x escape in BPE token '" +
                            std::string(escaped) + "'");
        }
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
        break;
      }
      default:
        throw ConfigError("unknown escape \\" + std::string(1, e) +
                          " in BPE token");
    }
  }
  return out;
}

BpeCounter::BpeCounter(std::span<const Merge> merges, std::string label)
    : label_(std::move(label)) {
  for (int b = 0; b < 256; ++b) intern(std::string(1, static_cast<char>(b)));
  std::uint32_t rank = 0;
  for (const auto& [left, right] : merges) {
    if (left.empty() || right.empty()) {
      throw ConfigError("empty token in BPE merge #" + std::to_string(rank));
    }
    const std::uint32_t l = intern(left);
    const std::uint32_t r = intern(right);
    const std::uint32_t merged = intern(left + right);
    rules_.try_emplace(pair_key(l, r), MergeRule{rank, merged});
    ++rank;
  }
  merge_count_ = merges.size();
}

std::uint32_t BpeCounter::intern(const std::string& token) {
  const auto [it, inserted] =
      ids_.try_emplace(token, static_cast<std::uint32_t>(ids_.size()));
  return it->second;
}

BpeCounter BpeCounter::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open BPE merges file " + path.string());
  }
  std::vector<Merge> merges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find(' ');
    if (sep == std::string::npos || line.find(' ', sep + 1) != std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected '<left> <right>'");
    }
    merges.emplace_back(unescape_bpe_token(line.substr(0, sep)),
                        unescape_bpe_token(line.substr(sep + 1)));
  }
  return BpeCounter(merges, "bpe:" + path.filename().string());
}

void BpeCounter::encode_piece(std::string_view text, std::size_t offset,
                              std::vector<CharSpan>& out) const {
  struct Symbol {
    std::uint32_t id;
    std::size_t start;
    std::size_t end;
  };
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    symbols.push_back(
        {static_cast<unsigned char>(text[i]), offset + i, offset + i + 1});
  }
  std::vector<Symbol> next;
  while (symbols.size() > 1) {
    std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t best_key = 0;
    std::uint32_t best_merged = 0;
    for (std::size_t k = 0; k + 1 < symbols.size(); ++k) {
      const auto key = pair_key(symbols[k].id, symbols[k + 1].id);
      const auto it = rules_.find(key);
      if (it != rules_.end() && it->second.rank < best_rank) {
        best_rank = it->second.rank;
        best_key = key;
        best_merged = it->second.merged_id;
      }
    }
    if (best_rank == std::numeric_limits<std::uint32_t>::max()) break;
    next.clear();
    for (std::size_t k = 0; k < symbols.size();) {
      if (k + 1 < symbols.size() &&
          pair_key(symbols[k].id, symbols[k + 1].id) == best_key) {
        next.push_back({best_merged, symbols[k].start, symbols[k + 1].end});
        k += 2;
      } else {
        next.push_back(symbols[k]);
        ++k;
      }
    }
    symbols.swap(next);
  }
  for (const Symbol& s : symbols) out.push_back({s.start, s.end});
}

std::vector<CharSpan> BpeCounter::tokenize(std::string_view text) const {
  std::vector<CharSpan> tokens;
  tokens.reserve(text.size() / 3 + 1);
  for (const CharSpan& piece : pretokenize(text)) {
    encode_piece(text.substr(piece.start, piece.size()), piece.start, tokens);
  }
  return tokens;
}

}  // namespace r2c
