fn main() {
    std::process::exit(lenscluster::commands::main_with(std::env::args_os()));
}
