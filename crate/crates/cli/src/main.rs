fn main() {
    std::process::exit(negset_cli::run(std::env::args_os()));
}
