#include "npwsd/xml.hpp"

#include <cctype>
#include <sstream>

#include "npwsd/errors.hpp"

namespace npwsd {

bool XmlElement::operator==(const XmlElement& other) const {
  return name == other.name && attrs == other.attrs && children == other.children;
}

namespace {

bool is_name_char(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' || u >= 0x80;
}

class Parser {
public:
  Parser(const std::string& text, const std::string& name)
      : src_(text), name_(name) {}

  XmlDocument parse() {
    XmlDocument doc;
    skip_whitespace();
    if (peek_starts("<?xml")) {
      doc.has_declaration = true;
      skip_until("?>");
    }
    skip_misc();
    if (pos_ >= src_.size() || src_[pos_] != '<') fail("expected root element");
    doc.root = parse_element();
    skip_misc();
    if (pos_ != src_.size()) fail("content after root element");
    return doc;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DataError(name_, line_, msg);
  }

  char cur() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') ++line_;
    ++pos_;
  }

  bool peek_starts(const std::string& s) const {
    return src_.compare(pos_, s.size(), s) == 0;
  }

  void expect(const std::string& s) {
    if (!peek_starts(s)) fail("expected \"" + s + "\"");
    for (std::size_t i = 0; i < s.size(); ++i) advance();
  }

  void skip_until(const std::string& end) {
    while (pos_ < src_.size() && !peek_starts(end)) advance();
    if (pos_ >= src_.size()) fail("unterminated \"" + end + "\"");
    for (std::size_t i = 0; i < end.size(); ++i) advance();
  }

  void skip_whitespace() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(cur())))
      advance();
  }

  // whitespace and comments outside the root element
  void skip_misc() {
    for (;;) {
      skip_whitespace();
      if (peek_starts("<!--"))
        skip_until("-->");
      else
        return;
    }
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_name_char(cur())) advance();
    if (pos_ == start) fail("expected a name");
    return src_.substr(start, pos_ - start);
  }

  std::string decode_entities(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      const std::size_t end = raw.find(';', i);
      if (end == std::string::npos) fail("unterminated entity reference");
      const std::string entity = raw.substr(i + 1, end - i - 1);
      if (entity == "amp") out += '&';
      else if (entity == "lt") out += '<';
      else if (entity == "gt") out += '>';
      else if (entity == "quot") out += '"';
      else if (entity == "apos") out += '\'';
      else fail("unsupported entity &" + entity + ";");
      i = end;
    }
    return out;
  }

  std::string parse_attr_value() {
    if (pos_ >= src_.size() || (cur() != '"' && cur() != '\''))
      fail("expected a quoted attribute value");
    const char quote = cur();
    advance();
    std::size_t start = pos_;
    while (pos_ < src_.size() && cur() != quote) {
      if (cur() == '<') fail("'<' in attribute value");
      advance();
    }
    if (pos_ >= src_.size()) fail("unterminated attribute value");
    const std::string raw = src_.substr(start, pos_ - start);
    advance();  // closing quote
    return decode_entities(raw);
  }

  XmlElement parse_element() {
    if (++depth_ > kMaxDepth) fail("element nesting deeper than 1000");
    expect("<");
    XmlElement element;
    element.name = parse_name();
    for (;;) {
      skip_whitespace();
      if (pos_ >= src_.size()) fail("unterminated start tag");
      if (peek_starts("/>")) {
        expect("/>");
        --depth_;
        return element;
      }
      if (cur() == '>') {
        advance();
        break;
      }
      const std::string attr = parse_name();
      skip_whitespace();
      expect("=");
      skip_whitespace();
      if (!element.attrs.emplace(attr, parse_attr_value()).second)
        fail("duplicate attribute \"" + attr + "\"");
    }
    // children until the matching end tag
    for (;;) {
      if (pos_ >= src_.size()) fail("missing </" + element.name + ">");
      if (peek_starts("</")) {
        expect("</");
        const std::string closing = parse_name();
        if (closing != element.name)
          fail("mismatched end tag </" + closing + ">, expected </" + element.name + ">");
        skip_whitespace();
        expect(">");
        --depth_;
        return element;
      }
      if (peek_starts("<!--")) {
        const std::size_t start = pos_ + 4;
        skip_until("-->");
        element.children.emplace_back(
            XmlComment{src_.substr(start, pos_ - 3 - start)});
        continue;
      }
      if (cur() == '<') {
        element.children.emplace_back(parse_element());
        continue;
      }
      std::size_t start = pos_;
      while (pos_ < src_.size() && cur() != '<') advance();
      element.children.emplace_back(XmlText{decode_entities(src_.substr(start, pos_ - start))});
    }
  }

  static constexpr std::size_t kMaxDepth = 1000;

  const std::string& src_;
  std::string name_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t depth_ = 0;
};

void serialize_node(const XmlNode& node, std::ostringstream& out);

void serialize_element(const XmlElement& element, std::ostringstream& out) {
  out << '<' << element.name;
  for (const auto& [key, value] : element.attrs)
    out << ' ' << key << "=\"" << xml_escape_attr(value) << '"';
  if (element.children.empty()) {
    out << "/>";
    return;
  }
  out << '>';
  for (const XmlNode& child : element.children) serialize_node(child, out);
  out << "</" << element.name << '>';
}

void serialize_node(const XmlNode& node, std::ostringstream& out) {
  if (const auto* element = std::get_if<XmlElement>(&node))
    serialize_element(*element, out);
  else if (const auto* text = std::get_if<XmlText>(&node))
    out << xml_escape_text(text->text);
  else if (const auto* comment = std::get_if<XmlComment>(&node))
    out << "<!--" << comment->text << "-->";
}

}  // namespace

XmlDocument parse_xml(const std::string& text, const std::string& name) {
  return Parser(text, name).parse();
}

std::string xml_escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

std::string xml_escape_attr(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string serialize(const XmlElement& element) {
  std::ostringstream out;
  serialize_element(element, out);
  return out.str();
}

std::string serialize(const XmlDocument& doc) {
  std::ostringstream out;
  if (doc.has_declaration) out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  serialize_element(doc.root, out);
  out << '\n';
  return out.str();
}

}  // namespace npwsd
