#include "qop/suites.hpp"
#include <iostream>
int main(){ auto r = qop::suite_stability(); std::cout << r.to_json().dump(2) << "\n"; return r.all_pass()?0:1; }
