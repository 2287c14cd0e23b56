// Batch driver for jets scripts.
//
//   jets-cli --script session.jets
//   echo 'ring R = [x,y,z]; ideal I = x*y*z; jets 2 I;' | jets-cli --json

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <jets/script.hpp>

int main(int argc, char **argv)
{
    CLI::App app{"Jets of polynomial ideals, monomial ideals and graphs"};
    std::string script_path;
    bool json = false;
    app.add_option("-s,--script", script_path, "Script file to run (default: read stdin)");
    app.add_flag("--json", json, "Emit one JSON object per result");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (script_path.empty() || script_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "error: cannot read " << script_path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    auto transcript = jets::script::run_script(text, json);
    std::cout << transcript.output;
    if (transcript.exit_code != 0) {
        std::cerr << "error: " << transcript.error << "\n";
    }
    return transcript.exit_code;
}
