// src/phonetics.cpp

// Copyright 2026 The puncap authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "puncap/phonetics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace puncap {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string strip_stress(std::string_view symbol) {
  std::size_t end = symbol.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(symbol[end - 1]))) --end;
  return std::string(symbol.substr(0, end));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

// ---------------------------------------------------------------------------
// PhonemeInventory
// ---------------------------------------------------------------------------

PhonemeInventory PhonemeInventory::from_stream(std::istream& in) {
  PhonemeInventory inv;
  std::map<std::vector<std::string>, int> signature_index;  // keyed by class+features
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split_ws(line);
    if (fields.size() < 2) {
      throw DataError("phoneme table line " + std::to_string(lineno) + ": too few fields");
    }
    Entry entry;
    if (fields[1] == "vowel") {
      entry.is_vowel = true;
      if (fields.size() != 6)
        throw DataError("phoneme table line " + std::to_string(lineno) +
                        ": vowel rows need 4 feature columns");
    } else if (fields[1] == "consonant") {
      entry.is_vowel = false;
      if (fields.size() != 5)
        throw DataError("phoneme table line " + std::to_string(lineno) +
                        ": consonant rows need 3 feature columns");
    } else {
      throw DataError("phoneme table line " + std::to_string(lineno) +
                      ": class must be vowel or consonant, got '" + fields[1] + "'");
    }
    entry.features.assign(fields.begin() + 2, fields.end());
    const std::string& symbol = fields[0];
    if (inv.index_.count(symbol))
      throw DataError("phoneme table: duplicate symbol '" + symbol + "'");

    std::vector<std::string> sig_key = entry.features;
    sig_key.push_back(entry.is_vowel ? "vowel" : "consonant");
    auto [it, inserted] =
        signature_index.emplace(std::move(sig_key), static_cast<int>(signature_index.size()));

    inv.index_.emplace(symbol, static_cast<int>(inv.symbols_.size()));
    inv.symbols_.push_back(symbol);
    inv.entries_.push_back(std::move(entry));
    inv.signatures_.push_back(it->second);
  }
  if (inv.symbols_.empty()) throw DataError("phoneme table: no entries");
  return inv;
}

PhonemeInventory PhonemeInventory::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open phoneme table: " + path);
  return from_stream(in);
}

bool PhonemeInventory::contains(std::string_view symbol) const {
  return index_.find(symbol) != index_.end();
}

int PhonemeInventory::id_of(std::string_view symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? -1 : it->second;
}

int PhonemeInventory::require(std::string_view symbol) const {
  int id = id_of(symbol);
  if (id < 0) throw DataError("unknown phoneme symbol '" + std::string(symbol) + "'");
  return id;
}

double PhonemeInventory::distance(std::string_view a, std::string_view b) const {
  int ia = require(a);
  int ib = require(b);
  if (ia == ib) return 0.0;
  const Entry& ea = entries_[ia];
  const Entry& eb = entries_[ib];
  if (ea.is_vowel != eb.is_vowel) return 1.0;  // cross-class maximal cost
  std::size_t differing = 0;
  for (std::size_t i = 0; i < ea.features.size(); ++i)
    if (ea.features[i] != eb.features[i]) ++differing;
  return static_cast<double>(differing) / static_cast<double>(ea.features.size());
}

// ---------------------------------------------------------------------------
// Dictionary parsing
// ---------------------------------------------------------------------------

std::vector<Pronunciation> parse_pronouncing_dict(std::istream& in,
                                                  const PhonemeInventory& inventory,
                                                  ParseReport* report) {
  std::vector<Pronunciation> out;
  std::string line;
  std::size_t lineno = 0;
  auto note = [&](const std::string& msg) {
    if (report) report->add(lineno, msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(";;;", 0) == 0) continue;

    std::vector<std::string> fields = split_ws(line);
    if (fields.size() < 2) {
      note("entry has no phonemes");
      continue;
    }

    std::string raw_word = fields[0];
    int variant = 1;
    if (raw_word.size() >= 3 && raw_word.back() == ')') {
      std::size_t open = raw_word.rfind('(');
      if (open != std::string::npos && open > 0) {
        std::string_view digits(raw_word.data() + open + 1, raw_word.size() - open - 2);
        int n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
          variant = n + 1;
          raw_word.resize(open);
        } else {
          note("unparseable variant suffix on '" + raw_word + "'");
          continue;
        }
      }
    }

    Pronunciation pron;
    pron.word = lowercase_ascii(raw_word);
    pron.variant = variant;
    bool ok = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::string symbol = strip_stress(fields[i]);
      if (!inventory.contains(symbol)) {
        note("unknown phoneme symbol '" + symbol + "' in entry '" + fields[0] + "'");
        ok = false;
        break;
      }
      pron.phonemes.push_back(std::move(symbol));
    }
    if (!ok) continue;
    out.push_back(std::move(pron));
  }

  if (out.empty()) throw DataError("pronouncing dictionary: no valid entries");
  return out;
}

// ---------------------------------------------------------------------------
// Edit distance
// ---------------------------------------------------------------------------

double pronunciation_distance(const std::vector<std::string>& a,
                              const std::vector<std::string>& b,
                              const PhonemeInventory& inventory) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // Two rows of the DP table; indels cost 1, substitutions cost the
  // feature distance.
  std::vector<double> prev(m + 1), curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = static_cast<double>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      double sub = prev[j - 1] + inventory.distance(a[i - 1], b[j - 1]);
      double del = prev[j] + 1.0;
      double ins = curr[j - 1] + 1.0;
      curr[j] = std::min({sub, del, ins});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

// ---------------------------------------------------------------------------
// PunLexicon
// ---------------------------------------------------------------------------

std::string_view to_string(PairSource source) {
  return source == PairSource::exact ? "exact" : "ar_metric";
}

PairSource pair_source_from_string(std::string_view s) {
  if (s == "exact") return PairSource::exact;
  if (s == "ar_metric") return PairSource::ar_metric;
  throw DataError("unknown pun pair source '" + std::string(s) + "'");
}

PunLexicon::PunLexicon(std::vector<PunPair> pairs) : pairs_(std::move(pairs)) {
  for (PunPair& p : pairs_) {
    if (p.word_a == p.word_b) throw DataError("pun pair with identical words: " + p.word_a);
    if (p.word_b < p.word_a) std::swap(p.word_a, p.word_b);
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const PunPair& x, const PunPair& y) {
    return std::tie(x.word_a, x.word_b) < std::tie(y.word_a, y.word_b);
  });
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end(),
                           [](const PunPair& x, const PunPair& y) {
                             return x.word_a == y.word_a && x.word_b == y.word_b;
                           }),
               pairs_.end());
  for (const PunPair& p : pairs_) {
    counterparts_[p.word_a].insert(p.word_b);
    counterparts_[p.word_b].insert(p.word_a);
  }
}

const std::set<std::string>& PunLexicon::counterparts_of(std::string_view word) const {
  static const std::set<std::string> kEmpty;
  auto it = counterparts_.find(word);
  return it == counterparts_.end() ? kEmpty : it->second;
}

void PunLexicon::save_tsv(std::ostream& out) const {
  for (const PunPair& p : pairs_) {
    out << p.word_a << '\t' << p.word_b << '\t' << to_string(p.source) << '\t'
        << format_double(p.distance) << '\n';
  }
}

PunLexicon PunLexicon::load_tsv(std::istream& in, ParseReport* report) {
  std::vector<PunPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 4) {
      if (report) report->add(lineno, "expected 4 tab-separated fields");
      continue;
    }
    PunPair p;
    p.word_a = fields[0];
    p.word_b = fields[1];
    p.source = pair_source_from_string(fields[2]);
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), d);
    if (ec != std::errc() || ptr != fields[3].data() + fields[3].size()) {
      if (report) report->add(lineno, "bad distance value '" + fields[3] + "'");
      continue;
    }
    p.distance = d;
    pairs.push_back(std::move(p));
  }
  return PunLexicon(std::move(pairs));
}

// ---------------------------------------------------------------------------
// Mining
// ---------------------------------------------------------------------------

namespace {

// Pronunciations mapped to inventory ids, grouped per word.
struct WordProns {
  std::vector<std::vector<int>> symbol_seqs;
  std::vector<std::vector<int>> signature_seqs;
};

double min_variant_distance(const std::vector<const Pronunciation*>& a_entries,
                            const std::vector<const Pronunciation*>& b_entries,
                            const PhonemeInventory& inventory) {
  double best = std::numeric_limits<double>::infinity();
  for (const Pronunciation* pa : a_entries)
    for (const Pronunciation* pb : b_entries)
      best = std::min(best, pronunciation_distance(pa->phonemes, pb->phonemes, inventory));
  return best;
}

}  // namespace

PunLexicon mine_pun_pairs(const std::vector<Pronunciation>& entries,
                          const std::vector<std::pair<std::string, std::string>>& external_pairs,
                          const PhonemeInventory& inventory,
                          ParseReport* report) {
  if (entries.empty()) throw DataError("mine_pun_pairs: no dictionary entries");

  std::map<std::string, WordProns> words;
  std::map<std::string, std::vector<const Pronunciation*>> word_entries;
  for (const Pronunciation& pron : entries) {
    WordProns& wp = words[pron.word];
    std::vector<int> ids;
    std::vector<int> sigs;
    ids.reserve(pron.phonemes.size());
    sigs.reserve(pron.phonemes.size());
    for (const std::string& sym : pron.phonemes) {
      int id = inventory.id_of(sym);
      if (id < 0) throw DataError("mine_pun_pairs: unknown phoneme '" + sym + "'");
      ids.push_back(id);
      sigs.push_back(inventory.signature_of(id));
    }
    wp.symbol_seqs.push_back(std::move(ids));
    wp.signature_seqs.push_back(std::move(sigs));
    word_entries[pron.word].push_back(&pron);
  }

  // Bucket words by exact symbol sequence and by feature signature sequence.
  // Distance 0 without symbol identity is exactly signature-sequence
  // equality, so no pairwise DP is needed for mining.
  std::map<std::vector<int>, std::set<std::string>> exact_buckets;
  std::map<std::vector<int>, std::set<std::string>> signature_buckets;
  for (const auto& [word, wp] : words) {
    for (const auto& seq : wp.symbol_seqs) exact_buckets[seq].insert(word);
    for (const auto& seq : wp.signature_seqs) signature_buckets[seq].insert(word);
  }

  std::map<std::pair<std::string, std::string>, PunPair> result;
  auto canonical = [](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return std::make_pair(std::move(a), std::move(b));
  };

  for (const auto& [seq, bucket] : exact_buckets) {
    for (auto it = bucket.begin(); it != bucket.end(); ++it)
      for (auto jt = std::next(it); jt != bucket.end(); ++jt) {
        auto key = canonical(*it, *jt);
        result[key] = PunPair{key.first, key.second, PairSource::exact, 0.0};
      }
  }
  for (const auto& [seq, bucket] : signature_buckets) {
    for (auto it = bucket.begin(); it != bucket.end(); ++it)
      for (auto jt = std::next(it); jt != bucket.end(); ++jt) {
        auto key = canonical(*it, *jt);
        if (!result.count(key))  // exact wins; ar_metric only when no variant matches
          result[key] = PunPair{key.first, key.second, PairSource::ar_metric, 0.0};
      }
  }

  for (const auto& [raw_a, raw_b] : external_pairs) {
    std::string a = lowercase_ascii(raw_a);
    std::string b = lowercase_ascii(raw_b);
    if (a == b) {
      if (report) report->add(0, "external pair with identical words '" + a + "' dropped");
      continue;
    }
    if (!words.count(a) || !words.count(b)) {
      if (report)
        report->add(0, "external pair (" + a + ", " + b + ") references a word not in the dictionary; dropped");
      continue;
    }
    auto key = canonical(a, b);
    auto it = result.find(key);
    if (it != result.end()) {
      it->second.source = PairSource::exact;  // external attestation trumps ar_metric
    } else {
      double d = min_variant_distance(word_entries.at(a), word_entries.at(b), inventory);
      result[key] = PunPair{key.first, key.second, PairSource::exact, d};
    }
  }

  std::vector<PunPair> pairs;
  pairs.reserve(result.size());
  for (auto& [key, pair] : result) pairs.push_back(std::move(pair));
  return PunLexicon(std::move(pairs));
}

}  // namespace puncap
