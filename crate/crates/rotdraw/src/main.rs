fn main() {
    std::process::exit(rotdraw::run(std::env::args_os()));
}
