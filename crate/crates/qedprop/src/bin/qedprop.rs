fn main() { std::process::exit(qedprop::cli::run()); }
