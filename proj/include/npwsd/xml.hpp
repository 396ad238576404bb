#ifndef NPWSD_XML_HPP
#define NPWSD_XML_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace npwsd {

// Just enough XML for SemCor-style corpora: elements, attributes, text and
// comments. No DOCTYPE, no CDATA, only the five predefined entities.
// Serialization is canonical: attributes come out in alphabetical order.

struct XmlElement;

struct XmlText {
  std::string text;
  bool operator==(const XmlText&) const = default;
};

struct XmlComment {
  std::string text;
  bool operator==(const XmlComment&) const = default;
};

using XmlNode = std::variant<XmlElement, XmlText, XmlComment>;

struct XmlElement {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<XmlNode> children;
  bool operator==(const XmlElement&) const;
};

struct XmlDocument {
  bool has_declaration = false;
  XmlElement root;
  bool operator==(const XmlDocument&) const = default;
};

// Throws DataError with a line number on malformed input.
XmlDocument parse_xml(const std::string& text, const std::string& name);

std::string serialize(const XmlDocument& doc);
std::string serialize(const XmlElement& element);

std::string xml_escape_text(const std::string& s);
std::string xml_escape_attr(const std::string& s);

}  // namespace npwsd

#endif
