fn main() {
    println!("galmat");
}
