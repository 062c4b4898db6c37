#include <rdlab/io.hh>

#include <fstream>
#include <iomanip>
#include <sstream>

using std::size_t;
using std::string;

namespace rdlab
{
    namespace
    {
        struct LineReader
        {
            std::istream & in;
            string name;
            size_t line_no = 0;

            // next non-blank, non-comment line
            auto next(string & line) -> bool
            {
                while (std::getline(in, line)) {
                    ++line_no;
                    auto first = line.find_first_not_of(" \t\r");
                    if (first == string::npos || line[first] == '#')
                        continue;
                    return true;
                }
                return false;
            }

            [[noreturn]] void fail(const string & what) const
            {
                throw Error{name + ":" + std::to_string(line_no) + ": " + what};
            }

            auto header(const string & key) -> size_t
            {
                string line;
                if (! next(line))
                    fail("missing '" + key + " <count>' line");
                std::istringstream ls{line};
                string word, rest;
                long long value = -1;
                if (! (ls >> word >> value) || word != key || (ls >> rest))
                    fail("expected '" + key + " <count>'");
                if (value < 1)
                    fail("'" + key + "' must be positive");
                return size_t(value);
            }
        };

        auto open_in(const string & path) -> std::ifstream
        {
            std::ifstream f{path};
            if (! f)
                throw Error{"cannot open " + path};
            return f;
        }

        auto open_out(const string & path) -> std::ofstream
        {
            std::ofstream f{path};
            if (! f)
                throw Error{"cannot write " + path};
            return f;
        }

        auto fnv1a(const string & s) -> string
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : s) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            std::ostringstream out;
            out << std::hex << std::setw(16) << std::setfill('0') << h;
            return out.str();
        }
    }

    auto parse_digraph(std::istream & in, const string & name) -> Digraph
    {
        LineReader r{in, name};
        size_t n = r.header("n");
        std::vector<Arc> arcs;
        string line;
        while (r.next(line)) {
            std::istringstream ls{line};
            long long u = -1, v = -1;
            string rest;
            if (! (ls >> u >> v) || (ls >> rest))
                r.fail("expected '<u> <v>'");
            if (u < 0 || v < 0 || size_t(u) >= n || size_t(v) >= n)
                r.fail("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            arcs.emplace_back(Vertex(u), Vertex(v));
        }
        return Digraph{n, arcs};
    }

    auto read_digraph(const string & path) -> Digraph
    {
        auto f = open_in(path);
        return parse_digraph(f, path);
    }

    void format_digraph(std::ostream & out, const Digraph & g)
    {
        out << "n " << g.size() << '\n';
        for (auto [u, v] : g.arcs())
            if (u != v)
                out << u << ' ' << v << '\n';
    }

    void write_digraph(const Digraph & g, const string & path)
    {
        auto f = open_out(path);
        format_digraph(f, g);
    }

    auto parse_op(std::istream & in, const string & name) -> OperationTable
    {
        LineReader r{in, name};
        size_t n = r.header("n");
        size_t k = r.header("k");
        size_t cells = TupleIndexer{n, k}.count();
        std::vector<Vertex> values;
        values.reserve(cells);
        string line;
        while (r.next(line)) {
            std::istringstream ls{line};
            string token;
            while (ls >> token) {
                size_t used = 0;
                long long v = -1;
                try {
                    v = std::stoll(token, &used);
                }
                catch (const std::exception &) {
                    r.fail("not a number: '" + token + "'");
                }
                if (used != token.size())
                    r.fail("not a number: '" + token + "'");
                if (v < 0 || size_t(v) >= n)
                    r.fail("value " + token + " out of range");
                if (values.size() == cells)
                    r.fail("more than " + std::to_string(cells) + " values");
                values.push_back(Vertex(v));
            }
        }
        if (values.size() != cells)
            r.fail("expected " + std::to_string(cells) + " values, found " + std::to_string(values.size()));
        return OperationTable{n, k, std::move(values)};
    }

    auto read_op(const string & path) -> OperationTable
    {
        auto f = open_in(path);
        return parse_op(f, path);
    }

    void format_op(std::ostream & out, const OperationTable & f)
    {
        out << "n " << f.base() << "\nk " << f.arity() << '\n';
        const size_t row = f.base();
        auto values = f.values();
        for (size_t i = 0; i < values.size(); ++i)
            out << values[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }

    void write_op(const OperationTable & f, const string & path)
    {
        auto out = open_out(path);
        format_op(out, f);
    }

    auto digest(const Digraph & g) -> string
    {
        std::ostringstream s;
        format_digraph(s, g);
        return fnv1a(s.str());
    }

    auto digest(const OperationTable & f) -> string
    {
        std::ostringstream s;
        format_op(s, f);
        return fnv1a(s.str());
    }
}
