fn main() {
    std::process::exit(qgs::app::main_with_args(std::env::args_os()));
}
