#include "bnfourier/network.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "bnfourier/error.hpp"
#include "lexer.hpp"

namespace bnf {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!detail::is_identifier_char(c)) return false;
  }
  return detail::classify(name) == detail::TokenKind::identifier;
}

}  // namespace

Network::Network(std::vector<std::string> pinned_inputs, std::vector<Definition> definitions) {
  std::unordered_map<std::string, std::size_t> def_pos;
  for (std::size_t k = 0; k < definitions.size(); ++k) {
    const auto& d = definitions[k];
    if (!valid_name(d.name)) throw ParseError("invalid node name '" + d.name + "'", d.line, 0);
    if (!def_pos.emplace(d.name, k).second) {
      throw ParseError("duplicate definition of '" + d.name + "'", d.line, 0);
    }
  }

  std::unordered_set<std::string> input_set;
  for (auto& name : pinned_inputs) {
    if (!valid_name(name)) throw ParseError("invalid input name '" + name + "'", 0, 0);
    if (def_pos.count(name)) throw ParseError("pinned input '" + name + "' is also defined", definitions[def_pos[name]].line, 0);
    if (!input_set.insert(name).second) throw ParseError("input '" + name + "' pinned twice", 0, 0);
    inputs_.push_back(name);
  }

  std::vector<std::vector<std::string>> regs(definitions.size());
  for (std::size_t k = 0; k < definitions.size(); ++k) {
    regs[k] = referenced_names(definitions[k].expr);
    for (const auto& r : regs[k]) {
      if (!def_pos.count(r) && input_set.insert(r).second) inputs_.push_back(r);
    }
  }

  // Depth-first post-order, visiting definitions in the given order.
  enum class Mark { none, active, done };
  std::vector<Mark> mark(definitions.size(), Mark::none);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (mark[k] == Mark::done) return;
    if (mark[k] == Mark::active) {
      std::string cycle;
      auto it = std::find(stack.begin(), stack.end(), k);
      for (; it != stack.end(); ++it) cycle += definitions[*it].name + " -> ";
      cycle += definitions[k].name;
      throw ParseError("cycle detected: " + cycle, definitions[k].line, 0);
    }
    mark[k] = Mark::active;
    stack.push_back(k);
    for (const auto& r : regs[k]) {
      if (auto it = def_pos.find(r); it != def_pos.end()) visit(it->second);
    }
    stack.pop_back();
    mark[k] = Mark::done;
    order.push_back(k);
  };
  for (std::size_t k = 0; k < definitions.size(); ++k) visit(k);

  defs_.reserve(order.size());
  regulators_.reserve(order.size());
  for (auto k : order) {
    defs_.push_back(std::move(definitions[k]));
    regulators_.push_back(std::move(regs[k]));
  }
  for (std::size_t j = 0; j < inputs_.size(); ++j) names_.emplace(inputs_[j], Entry{true, j});
  for (std::size_t k = 0; k < defs_.size(); ++k) names_.emplace(defs_[k].name, Entry{false, k});
}

bool Network::is_input(std::string_view name) const {
  const auto it = names_.find(std::string(name));
  return it != names_.end() && it->second.is_input;
}

bool Network::contains(std::string_view name) const { return names_.count(std::string(name)) != 0; }

std::optional<std::size_t> Network::input_index(std::string_view name) const {
  const auto it = names_.find(std::string(name));
  if (it == names_.end() || !it->second.is_input) return std::nullopt;
  return it->second.index;
}

std::optional<std::size_t> Network::definition_index(std::string_view name) const {
  const auto it = names_.find(std::string(name));
  if (it == names_.end() || it->second.is_input) return std::nullopt;
  return it->second.index;
}

std::size_t Network::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : regulators_) total += r.size();
  return total;
}

Network parse_network(std::string_view text) {
  std::vector<std::string> pinned;
  std::vector<Definition> defs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_inputs = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t line_start = start;
    start = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const std::string_view body = trim(line);
    const std::size_t body_col = static_cast<std::size_t>(body.data() - text.data()) - line_start;
    if (body.starts_with("@inputs")) {
      if (seen_inputs) throw ParseError("repeated @inputs header", line_no, body_col + 1);
      if (!defs.empty()) throw ParseError("@inputs must precede all definitions", line_no, body_col + 1);
      seen_inputs = true;
      const auto tokens = detail::tokenize(body.substr(7), line_no, body_col + 7);
      for (const auto& tok : tokens) {
        if (tok.kind == detail::TokenKind::end) break;
        if (tok.kind != detail::TokenKind::identifier) {
          throw ParseError("expected input name, got '" + std::string(tok.text) + "'", line_no, tok.column);
        }
        pinned.emplace_back(tok.text);
      }
      continue;
    }
    if (body.starts_with("@")) throw ParseError("unknown directive", line_no, body_col + 1);

    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'name = expression'", line_no, body_col + 1);
    const std::string_view lhs = trim(body.substr(0, eq));
    if (!valid_name(lhs)) {
      throw ParseError("invalid node name '" + std::string(lhs) + "'", line_no, body_col + 1);
    }
    const std::string_view rhs = body.substr(eq + 1);
    Expr expr = detail::parse_expression_at(rhs, line_no, body_col + eq + 1);
    defs.push_back({std::string(lhs), std::move(expr), line_no});
  }
  return Network(std::move(pinned), std::move(defs));
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open network file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string print_network(const Network& net) {
  std::string out = "@inputs";
  for (const auto& name : net.inputs()) out += " " + name;
  out += '\n';
  for (const auto& d : net.definitions()) out += d.name + " = " + to_string(d.expr) + '\n';
  return out;
}

std::size_t out_degree(const Network& net, std::string_view name) {
  if (!net.contains(name)) throw InputError("unknown node '" + std::string(name) + "'");
  std::size_t count = 0;
  for (std::size_t k = 0; k < net.definitions().size(); ++k) {
    const auto& regs = net.regulators(k);
    if (std::find(regs.begin(), regs.end(), name) != regs.end()) ++count;
  }
  return count;
}

std::vector<bool> evaluate_network(const Network& net, const std::vector<bool>& inputs) {
  if (inputs.size() != net.inputs().size()) throw InputError("input assignment size mismatch");
  std::unordered_map<std::string, bool> value;
  for (std::size_t j = 0; j < inputs.size(); ++j) value[net.inputs()[j]] = inputs[j];
  std::vector<bool> out;
  out.reserve(net.definitions().size());
  for (const auto& d : net.definitions()) {
    const bool v = evaluate(d.expr, [&](const std::string& n) { return value.at(n); });
    value[d.name] = v;
    out.push_back(v);
  }
  return out;
}

}  // namespace bnf
