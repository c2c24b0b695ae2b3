#include "fent/group_element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fent/errors.hpp"

namespace fent {

GroupElement::GroupElement(std::vector<int> support) : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (!support_.empty() && support_.front() < 1)
    throw std::invalid_argument("GroupElement: coordinates are 1-based");
}

GroupElement GroupElement::single(int coordinate) {
  return GroupElement{std::vector<int>{coordinate}};
}

bool GroupElement::contains(int coordinate) const {
  return std::binary_search(support_.begin(), support_.end(), coordinate);
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  std::vector<int> out;
  out.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(),
                                other.support_.begin(), other.support_.end(),
                                std::back_inserter(out));
  GroupElement result;
  result.support_ = std::move(out);
  return result;
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  *this = *this + other;
  return *this;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) os << ',';
    os << support_[i];
  }
  os << '}';
  return os.str();
}

GroupElement GroupElement::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("GroupElement: expected \"{i,j,...}\", got \"" + text + "\"");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> support;
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1)
          throw std::invalid_argument(tok);
        support.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("GroupElement: bad coordinate \"" + tok + "\" in \"" + text + "\"");
      }
    }
  }
  return GroupElement{std::move(support)};
}

}  // namespace fent
