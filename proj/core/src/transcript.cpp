#include "iru/transcript.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "iru/error.hpp"

namespace iru {

namespace {

struct Field {
  std::string value;
  std::size_t line = 0;
};

struct RawRecord {
  std::size_t first_line = 0;
  std::map<std::string, Field> fields;
};

constexpr std::string_view kHeaderKeys[] = {"dialogue", "participants", "require-acceptance"};
constexpr std::string_view kEventKeys[] = {"id",          "turn",        "speaker",    "addressee",
                                           "text",        "act",         "intonation", "realizes",
                                           "antecedents", "implicates",  "supports",   "rejects",
                                           "interrupted"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

bool valid_key(std::string_view k) {
  return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || c == '-';
  });
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';' || c == ':';
  });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Transcript run() {
    auto records = split_records();
    if (records.empty()) {
      error(ErrorKind::kEmptyTranscript, 1, "no records");
      throw ParseError(std::move(diagnostics_));
    }
    parse_header(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) parse_event(records[i], i - 1);
    if (!diagnostics_.empty()) {
      std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                       [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
      throw ParseError(std::move(diagnostics_));
    }
    return std::move(out_);
  }

 private:
  void error(ErrorKind kind, std::size_t line, std::string message) {
    diagnostics_.push_back({kind, line, std::move(message)});
  }

  std::vector<RawRecord> split_records() {
    std::vector<RawRecord> records;
    std::optional<RawRecord> current;
    std::size_t line_no = 0;
    std::string_view rest = text_;
    while (!rest.empty()) {
      auto nl = rest.find('\n');
      auto line = rest.substr(0, nl);
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

      auto content = trim(line);
      if (content.empty()) {
        if (current) records.push_back(std::move(*current));
        current.reset();
        continue;
      }
      if (content.front() == '#') continue;
      if (!current) current = RawRecord{line_no, {}};

      auto colon = content.find(':');
      if (colon == std::string_view::npos) {
        error(ErrorKind::kBadValue, line_no, "expected 'key: value'");
        continue;
      }
      std::string key(trim(content.substr(0, colon)));
      if (!valid_key(key)) {
        error(ErrorKind::kUnknownField, line_no, "malformed key '" + key + "'");
        continue;
      }
      Field field{std::string(trim(content.substr(colon + 1))), line_no};
      if (!current->fields.emplace(key, std::move(field)).second) {
        error(ErrorKind::kDuplicateField, line_no, "key '" + key + "' repeated in record");
      }
    }
    if (current) records.push_back(std::move(*current));
    return records;
  }

  template <std::size_t N>
  bool check_keys(const RawRecord& r, const std::string_view (&allowed)[N], std::string_view what) {
    bool ok = true;
    for (const auto& [key, field] : r.fields) {
      if (std::find(std::begin(allowed), std::end(allowed), key) == std::end(allowed)) {
        error(ErrorKind::kUnknownField, field.line,
              "unknown " + std::string(what) + " key '" + key + "'");
        ok = false;
      }
    }
    return ok;
  }

  const Field* require(const RawRecord& r, const std::string& key) {
    auto it = r.fields.find(key);
    if (it == r.fields.end()) {
      error(ErrorKind::kMissingField, r.first_line, "record lacks required key '" + key + "'");
      return nullptr;
    }
    return &it->second;
  }

  const Field* optional_field(const RawRecord& r, const std::string& key) {
    auto it = r.fields.find(key);
    return it == r.fields.end() ? nullptr : &it->second;
  }

  std::optional<bool> parse_bool(const Field& f, std::string_view key) {
    if (f.value == "true") return true;
    if (f.value == "false") return false;
    error(ErrorKind::kBadValue, f.line, std::string(key) + " must be true or false");
    return std::nullopt;
  }

  void parse_header(const RawRecord& r) {
    check_keys(r, kHeaderKeys, "header");
    if (const auto* f = require(r, "dialogue")) {
      if (f->value.empty()) error(ErrorKind::kBadValue, f->line, "dialogue name is empty");
      out_.dialogue = f->value;
    }
    if (const auto* f = require(r, "participants")) {
      auto names = split(f->value, ',');
      if (names.size() != 2 || !valid_name(names[0]) || !valid_name(names[1]) ||
          names[0] == names[1]) {
        error(ErrorKind::kBadValue, f->line, "participants must name exactly two distinct speakers");
      } else {
        out_.participants = {ParticipantId(std::string(names[0])),
                             ParticipantId(std::string(names[1]))};
      }
    }
    if (const auto* f = optional_field(r, "require-acceptance")) {
      if (auto b = parse_bool(*f, "require-acceptance")) out_.require_acceptance = *b;
    }
  }

  bool is_participant(const std::string& name) const {
    return out_.participants[0].str() == name || out_.participants[1].str() == name;
  }

  std::optional<Proposition> parse_prop(std::string_view text, std::size_t line) {
    try {
      return parse_proposition(text);
    } catch (const Error& e) {
      error(e.kind(), line, e.detail());
      return std::nullopt;
    }
  }

  std::optional<std::pair<Proposition, Proposition>> parse_arrow(const Field& f) {
    auto pos = f.value.find("=>");
    if (pos == std::string::npos || f.value.find("=>", pos + 2) != std::string::npos) {
      error(ErrorKind::kBadPropositionSyntax, f.line, "expected 'premise => conclusion'");
      return std::nullopt;
    }
    auto lhs = parse_prop(std::string_view(f.value).substr(0, pos), f.line);
    auto rhs = parse_prop(std::string_view(f.value).substr(pos + 2), f.line);
    if (!lhs || !rhs) return std::nullopt;
    return std::make_pair(std::move(*lhs), std::move(*rhs));
  }

  bool earlier(const UtteranceId& id) const { return seen_ids_.count(id) > 0; }

  void parse_event(const RawRecord& r, std::size_t position) {
    check_keys(r, kEventKeys, "utterance");
    UtteranceEvent e;

    if (const auto* f = require(r, "id")) {
      if (!valid_name(f->value)) {
        error(ErrorKind::kBadValue, f->line, "bad utterance id '" + f->value + "'");
      } else {
        e.id = UtteranceId(f->value);
        if (seen_ids_.count(e.id)) {
          error(ErrorKind::kDuplicateUtterance, f->line, "utterance id '" + f->value + "' reused");
        }
      }
    }
    if (const auto* f = require(r, "turn")) {
      std::uint32_t turn = 0;
      auto [ptr, ec] = std::from_chars(f->value.data(), f->value.data() + f->value.size(), turn);
      if (ec != std::errc() || ptr != f->value.data() + f->value.size()) {
        error(ErrorKind::kBadValue, f->line, "turn must be a non-negative integer");
      } else if (turn != position) {
        error(ErrorKind::kBadValue, f->line,
              "turn " + f->value + " out of sequence, expected " + std::to_string(position));
      } else {
        e.turn = turn;
      }
    }
    for (auto [key, slot] : {std::pair{"speaker", &e.speaker}, std::pair{"addressee", &e.addressee}}) {
      if (const auto* f = require(r, key)) {
        if (!is_participant(f->value)) {
          error(ErrorKind::kBadValue, f->line, std::string(key) + " '" + f->value + "' is not a participant");
        } else {
          *slot = ParticipantId(f->value);
        }
      }
    }
    if (!e.speaker.empty() && e.speaker == e.addressee) {
      error(ErrorKind::kBadValue, r.fields.at("addressee").line, "speaker cannot address themselves");
    }
    if (const auto* f = require(r, "text")) e.text = f->value;

    if (const auto* f = optional_field(r, "act")) {
      if (auto a = parse_act(f->value)) {
        e.act = a;
      } else {
        error(ErrorKind::kBadValue, f->line, "unknown act '" + f->value + "'");
      }
    }
    if (const auto* f = optional_field(r, "intonation")) {
      if (auto i = parse_intonation(f->value)) {
        e.intonation = *i;
      } else {
        error(ErrorKind::kBadValue, f->line, "intonation must be rising, falling or unmarked");
      }
    }
    if (const auto* f = optional_field(r, "realizes"); f && !f->value.empty()) {
      for (auto part : split(f->value, ';')) {
        if (auto p = parse_prop(part, f->line)) e.realizes.push_back(std::move(*p));
      }
    }
    if (const auto* f = optional_field(r, "antecedents"); f && !f->value.empty()) {
      for (auto part : split(f->value, ',')) {
        UtteranceId a{std::string(part)};
        if (!earlier(a)) {
          error(ErrorKind::kDanglingAntecedent, f->line,
                "antecedent '" + a.str() + "' is not an earlier utterance");
        } else if (std::find(e.antecedents.begin(), e.antecedents.end(), a) != e.antecedents.end()) {
          error(ErrorKind::kBadValue, f->line, "antecedent '" + a.str() + "' listed twice");
        } else {
          e.antecedents.push_back(std::move(a));
        }
      }
    }
    if (const auto* f = optional_field(r, "implicates")) {
      if (auto pq = parse_arrow(*f)) e.implicates = Implicature{pq->first, pq->second};
    }
    if (const auto* f = optional_field(r, "supports")) {
      if (auto pq = parse_arrow(*f)) e.supports = SupportAnnotation{pq->first, pq->second};
    }
    if (const auto* f = optional_field(r, "rejects")) {
      UtteranceId target{f->value};
      if (!earlier(target)) {
        error(ErrorKind::kDanglingAntecedent, f->line,
              "rejected utterance '" + f->value + "' is not an earlier utterance");
      } else {
        e.rejects = std::move(target);
      }
    }
    if (const auto* f = optional_field(r, "interrupted")) {
      if (auto b = parse_bool(*f, "interrupted")) e.interrupted = *b;
    }
    if (e.act == Act::kPrompt && !e.realizes.empty()) {
      error(ErrorKind::kBadValue, r.fields.at("act").line, "a prompt realizes no propositions");
    }

    if (!e.id.empty()) seen_ids_.insert(e.id);
    out_.events.push_back(std::move(e));
  }

  std::string_view text_;
  Transcript out_;
  std::set<UtteranceId> seen_ids_;
  std::vector<Diagnostic> diagnostics_;
};

void put(std::ostringstream& os, std::string_view key, std::string_view value) {
  os << key << ':';
  if (!value.empty()) os << ' ' << value;
  os << '\n';
}

template <class T, class F>
std::string join(const std::vector<T>& items, std::string_view sep, F render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += render(items[i]);
  }
  return out;
}

}  // namespace

Transcript parse_transcript(std::string_view text) { return Parser(text).run(); }

Transcript load_transcript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError({{ErrorKind::kIo, 0, "cannot read " + path.string()}});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_transcript(buf.str());
}

std::string serialize(const Transcript& t) {
  std::ostringstream os;
  put(os, "dialogue", t.dialogue);
  put(os, "participants", t.participants[0].str() + ", " + t.participants[1].str());
  put(os, "require-acceptance", t.require_acceptance ? "true" : "false");
  for (const auto& e : t.events) {
    os << '\n';
    put(os, "id", e.id.str());
    put(os, "turn", std::to_string(e.turn));
    put(os, "speaker", e.speaker.str());
    put(os, "addressee", e.addressee.str());
    put(os, "text", e.text);
    if (e.act) put(os, "act", to_string(*e.act));
    put(os, "intonation", to_string(e.intonation));
    if (!e.realizes.empty()) {
      put(os, "realizes", join(e.realizes, "; ", [](const Proposition& p) { return to_string(p); }));
    }
    if (!e.antecedents.empty()) {
      put(os, "antecedents", join(e.antecedents, ", ", [](const UtteranceId& u) { return u.str(); }));
    }
    if (e.implicates) {
      put(os, "implicates", to_string(e.implicates->premise) + " => " + to_string(e.implicates->conclusion));
    }
    if (e.supports) {
      put(os, "supports", to_string(e.supports->belief) + " => " + to_string(e.supports->goal));
    }
    if (e.rejects) put(os, "rejects", e.rejects->str());
    if (e.interrupted) put(os, "interrupted", "true");
  }
  return os.str();
}

}  // namespace iru
