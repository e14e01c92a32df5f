#include <fstream>
#include <sstream>

#include "picloc/errors.hpp"
#include "picloc/simplicial.hpp"

namespace picloc {

SimplicialComplex parse_facet_text(std::string_view text)
{
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> facets;
    bool seen_content = false;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;

        if (words.front().starts_with("vertices:"))
        {
            if (seen_content)
                throw ParseError("line " + std::to_string(line_no) + ": 'vertices:' must come first");
            std::string rest = words.front().substr(9);
            if (!rest.empty())
                vertices.push_back(rest);
            vertices.insert(vertices.end(), words.begin() + 1, words.end());
            if (vertices.empty())
                throw ParseError("line " + std::to_string(line_no) + ": empty vertex list");
        }
        else
            facets.push_back(std::move(words));
        seen_content = true;
    }
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

SimplicialComplex read_facet_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_facet_text(buf.str());
}

}   // namespace picloc
