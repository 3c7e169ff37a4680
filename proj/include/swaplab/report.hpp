#pragma once

// Structured-text reports: ordered key/value lines nested by indentation,
// with a JSON mirror. Reports serialize identically across runs with equal
// inputs; timing lines are the documented exception.

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace swaplab {

class Report {
 public:
  struct Node {
    std::string key;
    std::string value;  // empty for pure section nodes
    std::vector<Node> children;
  };

  Report& add(const std::string& key, const std::string& value) {
    roots_.push_back(Node{key, value, {}});
    return *this;
  }
  Report& add(const std::string& key, const char* value) {
    return add(key, std::string(value));
  }
  Report& add(const std::string& key, std::uint64_t value) {
    return add(key, std::to_string(value));
  }
  Report& add(const std::string& key, bool value) {
    return add(key, value ? std::string("true") : std::string("false"));
  }

  Node& section(const std::string& key) {
    roots_.push_back(Node{key, "", {}});
    return roots_.back();
  }

  static void add_to(Node& node, const std::string& key, const std::string& value) {
    node.children.push_back(Node{key, value, {}});
  }
  static void add_to(Node& node, const std::string& key, const char* value) {
    add_to(node, key, std::string(value));
  }
  static void add_to(Node& node, const std::string& key, std::uint64_t value) {
    add_to(node, key, std::to_string(value));
  }
  static Node& section_of(Node& node, const std::string& key) {
    node.children.push_back(Node{key, "", {}});
    return node.children.back();
  }

  std::string text() const {
    std::ostringstream out;
    for (const auto& n : roots_) write(out, n, 0);
    return out.str();
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& n : roots_) out[n.key] = to_json(n);
    return out;
  }

 private:
  static void write(std::ostringstream& out, const Node& n, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << n.key << ':';
    if (!n.value.empty()) out << ' ' << n.value;
    out << '\n';
    for (const auto& c : n.children) write(out, c, depth + 1);
  }

  static nlohmann::ordered_json to_json(const Node& n) {
    if (n.children.empty()) return n.value;
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& c : n.children) out[c.key] = to_json(c);
    return out;
  }

  std::vector<Node> roots_;
};

// FNV-1a over the serialized machine text; identifies the subject in reports.
inline std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace swaplab
