/*@pos*/ import org.apache.log4j.Logger;
/*@pos*/ import org.apache.log4j.spi.Filter;
import java.util.List;
import java.io.File;

class App {
  void run() {}
}
